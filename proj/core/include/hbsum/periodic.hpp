#pragma once

#include "hbsum/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hbsum {

/// Value of a periodized function together with a flag recording whether
/// the integer-argument special case (sawtooth / order-0 quasi-periodic
/// Euler function) fired.
struct PeriodicValue {
  Rational value;
  bool at_integer_breakpoint = false;
};

/// ((x)) = {x} - 1/2 off integers, 0 at integers.
Rational sawtooth(const Rational& x);
PeriodicValue sawtooth_value(const Rational& x);

/// 1-periodic Bernoulli function: 1 for n = 0, ((x)) for n = 1, B_n({x})
/// for n >= 2.
Rational bernoulli_bar(std::int64_t n, const Rational& x);

/// Quasi-periodic Euler function: for n = 0, (-1)^[x] off integers and 0
/// at integers; for n >= 1, (-1)^[x] E_n({x}).
Rational euler_bar(std::int64_t n, const Rational& x);
PeriodicValue euler_bar_value(std::int64_t n, const Rational& x);

/// a^{n-1} sum_{r=0}^{a-1} B̄_n(x + r/a); equals bernoulli_bar(n, a*x).
/// Requires n >= 1, a >= 1.
Rational raabe_sum(std::int64_t n, std::int64_t a, const Rational& x);

/// sum_{r=0}^{|c|-1} B̄_j((r+x)/c); equals c^{1-j} sgn(c) B̄_j(x).
/// Requires j >= 1 and c != 0.
Rational distribution_sum(std::int64_t j, std::int64_t c, const Rational& x);

/// Randomized exact identity suites over the periodized functions:
/// periodicity, quasi-periodicity, both reflections, the multiplication
/// formula, and the distribution formula. Every instance must hold exactly.
struct SuiteCounts {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
};
std::vector<SuiteCounts> run_identity_suites(std::int64_t count_per_suite,
                                             std::uint64_t seed);

}  // namespace hbsum
