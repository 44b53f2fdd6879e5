#include "hbsum/sums.hpp"

#include "hbsum/periodic.hpp"

#include <cstdlib>

namespace hbsum {

namespace {

// parity of r + [q], the alternating sign shared by the Hardy-type sums
bool odd_exponent(std::int64_t r, const Rational& q) {
  const Int fl = floor_frac(q).first;
  return (Int(r) + fl) % 2 != 0;
}

}  // namespace

Rational dedekind_sum(std::int64_t a, std::int64_t b) {
  if (b == 0) throw DomainError("dedekind_sum: b must be nonzero");
  const std::int64_t terms = std::abs(b);
  Rational s = 0;
  for (std::int64_t r = 0; r < terms; ++r) {
    s += sawtooth(make_rational(r, b)) * sawtooth(make_rational(Int(a) * r, Int(b)));
  }
  return s;
}

Rational hardy_s5(std::int64_t a, std::int64_t b) {
  if (b == 0) throw DomainError("hardy_s5: b must be nonzero");
  const std::int64_t terms = std::abs(b);
  Rational s = 0;
  for (std::int64_t r = 0; r < terms; ++r) {
    const Rational t = sawtooth(make_rational(r, b));
    if (t == 0) continue;
    if (odd_exponent(r, make_rational(Int(a) * r, Int(b)))) {
      s -= t;
    } else {
      s += t;
    }
  }
  return s;
}

Rational hardy_s5_three(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (c == 0) throw DomainError("hardy_s5_three: c must be nonzero");
  const std::int64_t terms = std::abs(c);
  Rational s = 0;
  for (std::int64_t r = 0; r < terms; ++r) {
    const Rational t = sawtooth(make_rational(Int(b) * r, Int(c)));
    if (t == 0) continue;
    if (odd_exponent(r, make_rational(Int(a) * r, Int(c)))) {
      s -= t;
    } else {
      s += t;
    }
  }
  return s;
}

Rational generalized_s5(const SumSpec& spec) {
  if (spec.c == 0) throw DomainError("generalized_s5: c must be nonzero");
  if (spec.m < 0 || spec.n < 0) {
    throw DomainError("generalized_s5: orders must be non-negative");
  }
  const std::int64_t terms = std::abs(spec.c);
  const Rational c(spec.c);
  Rational s = 0;
  for (std::int64_t r = 0; r < terms; ++r) {
    const Rational shift = (Rational(r) + spec.z) / c;
    const Rational e = euler_bar(spec.m, Rational(spec.a) * shift - spec.x);
    if (e == 0) continue;
    const Rational term = e * bernoulli_bar(spec.n, Rational(spec.b) * shift - spec.y);
    if (r % 2 != 0) {
      s -= term;
    } else {
      s += term;
    }
  }
  return s;
}

}  // namespace hbsum
