#pragma once

#include "hbsum/rational.hpp"
#include "hbsum/sums.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace hbsum {

enum class IdentityId {
  dedekind_12,  // s(a,b) + s(b,a) closed form, coprime positive a,b
  hardy_13,     // s5(a,b) + s5(b,a) closed form, coprime odd positive a,b
  thm_11,       // generalized two-term reciprocity, odd a,b
  cor_12,       // hardy_13 with the coprimality hypothesis removed
  thm_13,       // generalized reciprocity with modulus c
  cor_14,       // three-argument reciprocity, pairwise coprime
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// Exact two-sided evaluation of one identity instance. verified holds
/// exactly when the residual lhs - rhs is the zero rational.
struct VerificationReport {
  IdentityId identity = IdentityId::dedekind_12;
  SumSpec params;
  Rational lhs = 0;
  Rational rhs = 0;
  Rational residual = 0;
  bool verified = false;
};

/// s(a,b) + s(b,a) = -1/4 + (a/b + b/a + 1/(ab))/12. Requires coprime
/// positive a, b.
VerificationReport verify_dedekind(std::int64_t a, std::int64_t b);

/// s5(a,b) + s5(b,a) = 1/2 - 1/(2ab). Requires coprime odd positive a, b.
VerificationReport verify_hardy(std::int64_t a, std::int64_t b);

/// s5(a,b) + s5(b,a) = 1/2 - (a,b)^2/(2ab). Requires odd positive a, b;
/// coprimality is not required.
VerificationReport verify_cor12(std::int64_t a, std::int64_t b);

/// The two binomial-weighted sums of generalized_s5 instances with
/// matrices (a 1 b / y x z) and (b 1 a / z x y). Requires odd a, b.
Rational thm11_lhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, const Rational& x, const Rational& y,
                   const Rational& z);

/// The Euler-function product, the double-delta sign term, and the
/// gcd-weighted order-(m+n+1) Euler term.
Rational thm11_rhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, const Rational& x, const Rational& y,
                   const Rational& z);

VerificationReport verify_thm11(std::int64_t m, std::int64_t n, std::int64_t a,
                                std::int64_t b, const Rational& x,
                                const Rational& y, const Rational& z);

/// Modulus-c generalization with matrices (a c b / y x z) and
/// (b c a / z x y). Requires odd a, b and c != 0.
Rational thm13_lhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, std::int64_t c, const Rational& x,
                   const Rational& y, const Rational& z);

Rational thm13_rhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, std::int64_t c, const Rational& x,
                   const Rational& y, const Rational& z);

VerificationReport verify_thm13(std::int64_t m, std::int64_t n, std::int64_t a,
                                std::int64_t b, std::int64_t c,
                                const Rational& x, const Rational& y,
                                const Rational& z);

/// s5(a,c,b) + s5(b,c,a) = (1/2) sum_{r=1}^{c-1} (-1)^{[ar/c]+[br/c]}
/// - c/(2ab) + 1/2. Requires odd positive pairwise-coprime a, b with
/// c >= 1 coprime to both.
VerificationReport verify_cor14(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace hbsum
