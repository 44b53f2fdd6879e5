#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hbsum {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1. Equality is structural equality of
/// that form. All arithmetic returns new values.
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematically invalid input (zero denominator, zero modulus, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A violated identity precondition (parity, sign, coprimality).
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

struct IntPair {
  Int a;
  Int b;
};

/// num/den reduced, sign carried by the numerator. Throws DomainError when
/// den == 0.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(std::int64_t num, std::int64_t den);

/// Non-negative gcd; gcd(0,0) = 0 by convention.
Int gcd(const IntPair& p);
Int gcd_int(const Int& a, const Int& b);

/// ([q], {q}) with [q] the floor toward -inf and {q} in [0,1), so that
/// [q] + {q} = q exactly. Note: NOT truncation toward zero.
std::pair<Int, Rational> floor_frac(const Rational& q);

int sgn(const Rational& q);
int sgn(std::int64_t v);

bool is_integer(const Rational& q);

/// 1 iff q is an integer, else 0.
int delta_int(const Rational& q);

/// (-1)^q for integral q; non-integer q signals a caller bug that skipped
/// the delta guard and throws DomainError.
int neg_one_pow(const Rational& q);

/// base^e for e >= 0; negative exponents are expressed by callers as
/// explicit division.
Rational pow_nonneg(const Rational& base, std::int64_t e);
Int pow_nonneg(const Int& base, std::int64_t e);

Int factorial(std::int64_t n);
Int binomial(std::int64_t n, std::int64_t k);

/// Parses "p/q" or "p" (optionally signed); the result is reduced. Decimal
/// or malformed text throws ParseError, a zero denominator DomainError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Coefficients of the two pole chains splitting 1/((d-x)^m (d-y)^n):
/// pole_x[j-1] multiplies 1/(d-x)^j for j = 1..m, pole_y likewise for y.
struct PartialFractionSplit {
  std::vector<Rational> pole_x;
  std::vector<Rational> pole_y;
};

/// Requires m, n >= 1 and x != y (else DomainError).
PartialFractionSplit partial_fraction_split(std::int64_t m, std::int64_t n,
                                            const Rational& x,
                                            const Rational& y);

}  // namespace hbsum
