#pragma once

#include "hbsum/rational.hpp"

#include <cstdint>
#include <vector>

namespace hbsum {

/// Memoized Bernoulli numbers and Bernoulli/Euler polynomial coefficient
/// rows, all exact. Instances are immutable once built; the shared cache
/// below grows monotonically by publishing extended copies, so readers are
/// lock-free after warm-up.
struct PolyTable {
  std::vector<Rational> bernoulli_numbers;  // index j, convention B1 = -1/2
  std::vector<std::vector<Rational>> bernoulli_coeff_rows;  // row n: coeff of x^i
  std::vector<std::vector<Rational>> euler_coeff_rows;
  std::int64_t max_order = -1;

  /// Builds a fresh table covering orders 0..order. Every Euler row is
  /// cross-checked coefficient-by-coefficient against the independent
  /// Bernoulli-polynomial closed form; a mismatch throws std::logic_error.
  static PolyTable build(std::int64_t order);
};

/// Order cap from HBSUM_MAX_ORDER (default 64); requests beyond it throw
/// DomainError.
std::int64_t poly_order_cap();

/// Shared table covering at least min_order. The returned reference stays
/// valid for the program lifetime.
const PolyTable& poly_table(std::int64_t min_order);

/// Pre-grow the shared table (call before fanning out parallel sweeps).
void warm_poly_table(std::int64_t order);

Rational bernoulli_number(std::int64_t j);

/// B_n(x) = sum_k binom(n,k) B_k x^{n-k}, exact.
Rational bernoulli_poly(std::int64_t n, const Rational& x);

/// E_n(x) from the Appell-style recurrence; rows are verified against the
/// closed form E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)).
Rational euler_poly(std::int64_t n, const Rational& x);

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace hbsum
