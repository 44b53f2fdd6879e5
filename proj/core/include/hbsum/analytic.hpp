#pragma once

#include "hbsum/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hbsum {

/// Floating complex value plus an estimated truncation bound. Comparisons
/// against exact values use |approx - exact| <= max(tolerance, tail_bound).
struct ApproxComplex {
  double real = 0.0;
  double imag = 0.0;
  double tail_bound = 0.0;

  std::complex<double> value() const { return {real, imag}; }
};

/// Adaptive truncation schedule for the bilateral/Fourier sums: start at
/// initial_terms pairs, multiply by growth_factor until the recorded tail
/// bound drops under tolerance or max_terms is reached.
struct TruncationPlan {
  std::int64_t initial_terms = 1000;
  double growth_factor = 4.0;
  std::int64_t max_terms = 1000000;
  double tolerance = 1e-6;

  /// Default plan per pole order: tolerance 1e-4 for the conditionally
  /// convergent order-1 sums, 1e-6 otherwise.
  static TruncationPlan for_order(std::int64_t j);
};

enum class CheckStatus {
  ok,
  non_convergence,    // cap reached with the bound still above tolerance
  unsupported_point,  // closed form does not cover the requested point
};

struct CheckResult {
  std::string check;
  std::string params;
  std::complex<double> lhs{0.0, 0.0};
  std::complex<double> rhs{0.0, 0.0};
  double deviation = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  std::int64_t terms_used = 0;
  CheckStatus status = CheckStatus::ok;
  bool passed = false;
};

/// Truncated Fourier series of the quasi-periodic Euler function; converges
/// to euler_bar(n, x) with vanishing imaginary part. Non-convergence at the
/// cap is reported through tail_bound > plan.tolerance.
ApproxComplex ebar_fourier(std::int64_t n, const Rational& x,
                           const TruncationPlan& plan);

/// Truncated Fourier series of the Bernoulli function (k = 0 excluded);
/// converges to bernoulli_bar(n, x). Requires n >= 1.
ApproxComplex bbar_fourier(std::int64_t n, const Rational& x,
                           const TruncationPlan& plan);

/// d^order/da^order cot(pi a) via exact integer derivative polynomials in
/// t = cot(pi a); only the final cot evaluation is floating point.
/// Requires a not an integer.
double cot_derivative(std::int64_t order, const Rational& a);

/// Integer coefficients of the derivative polynomial q_order(t) with
/// d^k/da^k cot(pi a) = pi^k q_k(cot(pi a)).
std::vector<Int> cot_derivative_coeffs(std::int64_t order);

/// Periodic zeta function F(r/b - 1/(2b), 1-j) through the finite
/// Euler-function closed form. Requires b != 0 and j >= 1.
ApproxComplex periodic_zeta_closed(std::int64_t r, std::int64_t b,
                                   std::int64_t j);

/// Compares the (j-1)-th cot derivative at the point against the periodic
/// zeta closed form. Points must be expressible as r/b - 1/(2b), i.e. have
/// an even reduced denominator; others yield an unsupported_point result.
CheckResult lemma24_check(const Rational& point, std::int64_t j,
                          double tolerance);

/// Bilateral sum of 1/(d + r/b - 1/(2b))^j against the exact finite
/// Euler-function combination.
CheckResult lemma25_check(std::int64_t j, std::int64_t b, std::int64_t r,
                          const TruncationPlan& plan);

/// Twisted bilateral sum of e^{2 pi i d x}/(d + r/b - 1/(2b))^j against its
/// finite closed form; x = 0 reduces to lemma25_check on the same path.
CheckResult lemma27_check(std::int64_t j, std::int64_t b, std::int64_t r,
                          const Rational& x, const TruncationPlan& plan);

}  // namespace hbsum
