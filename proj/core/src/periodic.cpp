#include "hbsum/periodic.hpp"

#include "hbsum/polys.hpp"

#include <random>

namespace hbsum {

PeriodicValue sawtooth_value(const Rational& x) {
  const auto [fl, fr] = floor_frac(x);
  if (fr == 0) {
    return {Rational(0), true};
  }
  return {fr - Rational(1, 2), false};
}

Rational sawtooth(const Rational& x) { return sawtooth_value(x).value; }

Rational bernoulli_bar(std::int64_t n, const Rational& x) {
  if (n < 0) throw DomainError("bernoulli_bar: negative order");
  if (n == 0) return Rational(1);
  if (n == 1) return sawtooth(x);
  return bernoulli_poly(n, floor_frac(x).second);
}

PeriodicValue euler_bar_value(std::int64_t n, const Rational& x) {
  if (n < 0) throw DomainError("euler_bar: negative order");
  const auto [fl, fr] = floor_frac(x);
  const bool odd_floor = fl % 2 != 0;
  if (n == 0) {
    if (fr == 0) {
      return {Rational(0), true};
    }
    return {Rational(odd_floor ? -1 : 1), false};
  }
  Rational v = euler_poly(n, fr);
  return {odd_floor ? Rational(-v) : v, false};
}

Rational euler_bar(std::int64_t n, const Rational& x) {
  return euler_bar_value(n, x).value;
}

Rational raabe_sum(std::int64_t n, std::int64_t a, const Rational& x) {
  if (n < 1) throw DomainError("raabe_sum: order must be >= 1");
  if (a < 1) throw DomainError("raabe_sum: modulus must be >= 1");
  Rational s = 0;
  for (std::int64_t r = 0; r < a; ++r) {
    s += bernoulli_bar(n, x + Rational(r, a));
  }
  return pow_nonneg(Rational(a), n - 1) * s;
}

Rational distribution_sum(std::int64_t j, std::int64_t c, const Rational& x) {
  if (j < 1) throw DomainError("distribution_sum: order must be >= 1");
  if (c == 0) throw DomainError("distribution_sum: zero modulus");
  Rational s = 0;
  const std::int64_t terms = c < 0 ? -c : c;
  for (std::int64_t r = 0; r < terms; ++r) {
    s += bernoulli_bar(j, (Rational(r) + x) / Rational(c));
  }
  return s;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-60, 60);
  std::uniform_int_distribution<std::int64_t> den(1, 24);
  return Rational(num(rng), den(rng));
}

}  // namespace

std::vector<SuiteCounts> run_identity_suites(std::int64_t count_per_suite,
                                             std::uint64_t seed) {
  std::vector<SuiteCounts> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> order(0, 6);
  std::uniform_int_distribution<std::int64_t> pos_order(1, 6);
  std::uniform_int_distribution<std::int64_t> modulus(1, 8);
  std::uniform_int_distribution<std::int64_t> signed_modulus(-6, 6);

  SuiteCounts periodicity{"bernoulli_bar_periodicity", 0, 0};
  for (std::int64_t i = 0; i < count_per_suite; ++i) {
    const std::int64_t n = order(rng);
    const Rational x = random_rational(rng);
    ++periodicity.instances;
    if (bernoulli_bar(n, x + 1) != bernoulli_bar(n, x)) ++periodicity.failures;
  }
  out.push_back(periodicity);

  SuiteCounts quasi{"euler_bar_quasi_periodicity", 0, 0};
  for (std::int64_t i = 0; i < count_per_suite; ++i) {
    const std::int64_t n = order(rng);
    const Rational x = random_rational(rng);
    ++quasi.instances;
    if (euler_bar(n, x + 1) != -euler_bar(n, x)) ++quasi.failures;
  }
  out.push_back(quasi);

  SuiteCounts ereflect{"euler_bar_reflection", 0, 0};
  for (std::int64_t i = 0; i < count_per_suite; ++i) {
    const std::int64_t n = order(rng);
    const Rational x = random_rational(rng);
    ++ereflect.instances;
    const Rational lhs = euler_bar(n, -x);
    const Rational rhs = is_integer(x)
                             ? euler_bar(n, x)
                             : (n % 2 == 0 ? Rational(-euler_bar(n, x))
                                           : euler_bar(n, x));
    if (lhs != rhs) ++ereflect.failures;
  }
  out.push_back(ereflect);

  SuiteCounts breflect{"bernoulli_bar_reflection", 0, 0};
  for (std::int64_t i = 0; i < count_per_suite; ++i) {
    const std::int64_t n = pos_order(rng);
    const Rational x = random_rational(rng);
    ++breflect.instances;
    const Rational lhs = bernoulli_bar(n, -x);
    const Rational rhs =
        n % 2 == 0 ? bernoulli_bar(n, x) : Rational(-bernoulli_bar(n, x));
    if (lhs != rhs) ++breflect.failures;
  }
  out.push_back(breflect);

  SuiteCounts raabe{"raabe_multiplication", 0, 0};
  for (std::int64_t i = 0; i < count_per_suite; ++i) {
    const std::int64_t n = pos_order(rng);
    const std::int64_t a = modulus(rng);
    const Rational x = random_rational(rng);
    ++raabe.instances;
    if (raabe_sum(n, a, x) != bernoulli_bar(n, Rational(a) * x)) ++raabe.failures;
  }
  out.push_back(raabe);

  SuiteCounts dist{"distribution_formula", 0, 0};
  for (std::int64_t i = 0; i < count_per_suite; ++i) {
    const std::int64_t j = pos_order(rng);
    std::int64_t c = signed_modulus(rng);
    if (c == 0) c = 1;
    const Rational x = random_rational(rng);
    ++dist.instances;
    const Rational rhs = Rational(sgn(c)) * bernoulli_bar(j, x) /
                         pow_nonneg(Rational(c), j - 1);
    if (distribution_sum(j, c, x) != rhs) ++dist.failures;
  }
  out.push_back(dist);

  return out;
}

}  // namespace hbsum
