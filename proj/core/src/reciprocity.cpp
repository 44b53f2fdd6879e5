#include "hbsum/reciprocity.hpp"

#include "hbsum/periodic.hpp"
#include "hbsum/polys.hpp"

#include <cstdlib>
#include <string>

namespace hbsum {

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::dedekind_12: return "dedekind_12";
    case IdentityId::hardy_13: return "hardy_13";
    case IdentityId::thm_11: return "thm_11";
    case IdentityId::cor_12: return "cor_12";
    case IdentityId::thm_13: return "thm_13";
    case IdentityId::cor_14: return "cor_14";
  }
  return "unknown";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (IdentityId id :
       {IdentityId::dedekind_12, IdentityId::hardy_13, IdentityId::thm_11,
        IdentityId::cor_12, IdentityId::thm_13, IdentityId::cor_14}) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

void require_odd(std::int64_t v, const char* name) {
  require(v % 2 != 0, std::string("precondition failed: ") + name +
                          " must be odd (got " + std::to_string(v) + ")");
}

void require_positive(std::int64_t v, const char* name) {
  require(v > 0, std::string("precondition failed: ") + name +
                     " must be positive (got " + std::to_string(v) + ")");
}

void require_coprime(std::int64_t a, std::int64_t b, const char* na,
                     const char* nb) {
  require(gcd_int(Int(a), Int(b)) == 1,
          std::string("precondition failed: gcd(") + na + ", " + nb +
              ") must be 1 (got gcd(" + std::to_string(a) + ", " +
              std::to_string(b) + "))");
}

VerificationReport finish(IdentityId id, SumSpec params, Rational lhs,
                          Rational rhs) {
  VerificationReport rep;
  rep.identity = id;
  rep.params = std::move(params);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.residual = rep.lhs - rep.rhs;
  rep.verified = rep.residual == 0;
  return rep;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(gcd_int(Int(a), Int(b)));
}

}  // namespace

VerificationReport verify_dedekind(std::int64_t a, std::int64_t b) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_coprime(a, b, "a", "b");
  const Rational lhs = dedekind_sum(a, b) + dedekind_sum(b, a);
  const Rational rhs = Rational(-1, 4) + (Rational(a, b) + Rational(b, a) +
                                          Rational(Int(1), Int(a) * b)) /
                                             12;
  return finish(IdentityId::dedekind_12, SumSpec{0, 0, a, b, 1, 0, 0, 0}, lhs,
                rhs);
}

VerificationReport verify_hardy(std::int64_t a, std::int64_t b) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_odd(a, "a");
  require_odd(b, "b");
  require_coprime(a, b, "a", "b");
  const Rational lhs = hardy_s5(a, b) + hardy_s5(b, a);
  const Rational rhs = Rational(1, 2) - Rational(Int(1), Int(2) * a * b);
  return finish(IdentityId::hardy_13, SumSpec{0, 0, a, b, 1, 0, 0, 0}, lhs,
                rhs);
}

VerificationReport verify_cor12(std::int64_t a, std::int64_t b) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_odd(a, "a");
  require_odd(b, "b");
  const Int g = Int(gcd64(a, b));
  const Rational lhs = hardy_s5(a, b) + hardy_s5(b, a);
  const Rational rhs = Rational(1, 2) - Rational(g * g, Int(2) * a * b);
  return finish(IdentityId::cor_12, SumSpec{0, 0, a, b, 1, 0, 0, 0}, lhs, rhs);
}

namespace {

// One binomial-weighted chain of generalized sums shared by both theorems:
//   2 p^order_q sgn(pq_sign) sum_{j=0}^{order_p} binom(order_p, j)
//     (-1)^j p_base^{order_p - j} / (c_pow^{...} (order_p+order_q+1-j))
//     S_{j, order_p+order_q+1-j}(top / bottom)
// Callers pass the fully instantiated matrix per term via a lambda.
template <typename MakeSpec>
Rational weighted_chain(std::int64_t order_p, std::int64_t order_q,
                        std::int64_t p_base, std::int64_t q_base,
                        std::int64_t c, MakeSpec make_spec, int sign) {
  const std::int64_t total = order_p + order_q;
  Rational sum = 0;
  for (std::int64_t j = 0; j <= order_p; ++j) {
    Int num = binomial(order_p, j) * pow_nonneg(Int(p_base), order_p - j);
    if (j % 2 != 0) num = -num;
    const Int den = pow_nonneg(Int(c), total - j) * Int(total + 1 - j);
    const Rational weight = make_rational(num, den);
    sum += weight * generalized_s5(make_spec(j, total + 1 - j));
  }
  return Rational(Int(2) * sign * pow_nonneg(Int(q_base), order_q)) * sum;
}

}  // namespace

Rational thm11_lhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, const Rational& x, const Rational& y,
                   const Rational& z) {
  require_odd(a, "a");
  require_odd(b, "b");
  // matrix (a 1 b / y x z): Euler slot gets y, Bernoulli slot gets x
  const Rational first = weighted_chain(
      m, n, a, b, 1,
      [&](std::int64_t j, std::int64_t k) {
        return SumSpec{j, k, a, 1, b, y, x, z};
      },
      sgn(b));
  const Rational second = weighted_chain(
      n, m, b, a, 1,
      [&](std::int64_t j, std::int64_t k) {
        return SumSpec{j, k, b, 1, a, z, x, y};
      },
      sgn(a));
  return first + second;
}

Rational thm11_rhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, const Rational& x, const Rational& y,
                   const Rational& z) {
  require_odd(a, "a");
  require_odd(b, "b");
  const std::int64_t g = gcd64(a, b);

  Rational rhs = euler_bar(m, Rational(a) * x - y) * euler_bar(n, Rational(b) * x - z);
  if ((m + n) % 2 != 0) rhs = -rhs;

  if (m == 0 && n == 0) {
    const Rational u = Rational(a) * x - y;
    const Rational v = Rational(b) * x - z;
    if (is_integer(u) && is_integer(v)) {
      rhs += Rational(sgn(a) * sgn(b) * neg_one_pow(u + v));
    }
  }

  // coefficient formed as a single reduced rational to limit growth
  Int num = Int(2) * factorial(m) * factorial(n) * pow_nonneg(Int(g), m + n + 2);
  if (m % 2 != 0) num = -num;
  const Int den =
      pow_nonneg(Int(a), n + 1) * pow_nonneg(Int(b), m + 1) * factorial(m + n + 1);
  rhs += make_rational(num, den) *
         euler_bar(m + n + 1, (Rational(a) * z - Rational(b) * y) / g);
  return rhs;
}

VerificationReport verify_thm11(std::int64_t m, std::int64_t n, std::int64_t a,
                                std::int64_t b, const Rational& x,
                                const Rational& y, const Rational& z) {
  require(m >= 0 && n >= 0, "precondition failed: orders must be >= 0");
  warm_poly_table(m + n + 1);
  const Rational lhs = thm11_lhs(m, n, a, b, x, y, z);
  const Rational rhs = thm11_rhs(m, n, a, b, x, y, z);
  return finish(IdentityId::thm_11, SumSpec{m, n, a, b, 1, x, y, z}, lhs, rhs);
}

Rational thm13_lhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, std::int64_t c, const Rational& x,
                   const Rational& y, const Rational& z) {
  require_odd(a, "a");
  require_odd(b, "b");
  require(c != 0, "precondition failed: c must be nonzero");
  const Rational first = weighted_chain(
      m, n, a, b, c,
      [&](std::int64_t j, std::int64_t k) {
        return SumSpec{j, k, a, c, b, y, x, z};
      },
      sgn(b) * sgn(c));
  const Rational second = weighted_chain(
      n, m, b, a, c,
      [&](std::int64_t j, std::int64_t k) {
        return SumSpec{j, k, b, c, a, z, x, y};
      },
      sgn(a) * sgn(c));
  return first + second;
}

Rational thm13_rhs(std::int64_t m, std::int64_t n, std::int64_t a,
                   std::int64_t b, std::int64_t c, const Rational& x,
                   const Rational& y, const Rational& z) {
  require_odd(a, "a");
  require_odd(b, "b");
  require(c != 0, "precondition failed: c must be nonzero");
  const std::int64_t g = gcd64(a, b);
  const std::int64_t terms = std::abs(c);

  Rational product_sum = 0;
  for (std::int64_t r = 0; r < terms; ++r) {
    const Rational shift = (Rational(r) - x) / c;
    product_sum += euler_bar(m, Rational(-a) * shift - y) *
                   euler_bar(n, Rational(-b) * shift - z);
  }
  if ((m + n) % 2 != 0) product_sum = -product_sum;
  Rational rhs = product_sum;

  Int num =
      Int(2) * sgn(c) * factorial(m) * factorial(n) * pow_nonneg(Int(g), m + n + 2) * c;
  if (m % 2 != 0) num = -num;
  const Int den =
      pow_nonneg(Int(a), n + 1) * pow_nonneg(Int(b), m + 1) * factorial(m + n + 1);
  rhs += make_rational(num, den) *
         euler_bar(m + n + 1, (Rational(a) * z - Rational(b) * y) / g);

  if (m == 0 && n == 0) {
    Rational delta_sum = 0;
    for (std::int64_t r = 0; r < terms; ++r) {
      const Rational shift = (Rational(r) - x) / c;
      const Rational u = Rational(a) * shift + y;
      const Rational v = Rational(b) * shift + z;
      if (is_integer(u) && is_integer(v)) {
        delta_sum += neg_one_pow(u + v);
      }
    }
    rhs += Rational(sgn(a) * sgn(b)) * delta_sum;
  }
  return rhs;
}

VerificationReport verify_thm13(std::int64_t m, std::int64_t n, std::int64_t a,
                                std::int64_t b, std::int64_t c,
                                const Rational& x, const Rational& y,
                                const Rational& z) {
  require(m >= 0 && n >= 0, "precondition failed: orders must be >= 0");
  warm_poly_table(m + n + 1);
  const Rational lhs = thm13_lhs(m, n, a, b, c, x, y, z);
  const Rational rhs = thm13_rhs(m, n, a, b, c, x, y, z);
  return finish(IdentityId::thm_13, SumSpec{m, n, a, b, c, x, y, z}, lhs, rhs);
}

VerificationReport verify_cor14(std::int64_t a, std::int64_t b,
                                std::int64_t c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  require_odd(a, "a");
  require_odd(b, "b");
  require_coprime(a, b, "a", "b");
  require_coprime(b, c, "b", "c");
  require_coprime(a, c, "a", "c");

  const Rational lhs = hardy_s5_three(a, c, b) + hardy_s5_three(b, c, a);

  Rational sign_sum = 0;  // empty when c = 1
  for (std::int64_t r = 1; r < c; ++r) {
    const Int fa = floor_frac(make_rational(Int(a) * r, Int(c))).first;
    const Int fb = floor_frac(make_rational(Int(b) * r, Int(c))).first;
    sign_sum += (fa + fb) % 2 != 0 ? -1 : 1;
  }
  const Rational rhs =
      sign_sum / 2 - Rational(Int(c), Int(2) * a * b) + Rational(1, 2);
  return finish(IdentityId::cor_14, SumSpec{0, 0, a, b, c, 0, 0, 0}, lhs, rhs);
}

}  // namespace hbsum
