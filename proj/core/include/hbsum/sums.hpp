#pragma once

#include "hbsum/rational.hpp"

#include <cstdint>

namespace hbsum {

/// Parameter matrix of the generalized sums: orders (m, n), top row
/// (a b c), bottom row (x y z). The sum runs over residues mod |c|, pairs
/// a with x inside the order-m Euler factor and b with y inside the
/// order-n Bernoulli factor, and shifts the residue by z.
struct SumSpec {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;
  Rational x = 0;
  Rational y = 0;
  Rational z = 0;
};

/// Classical Dedekind sum: sum_{r=0}^{|b|-1} ((r/b)) ((ar/b)). Requires
/// b != 0.
Rational dedekind_sum(std::int64_t a, std::int64_t b);

/// Hardy-Berndt sum: sum_{r=0}^{|b|-1} (-1)^{r+[ar/b]} ((r/b)). Requires
/// b != 0.
Rational hardy_s5(std::int64_t a, std::int64_t b);

/// Three-argument form: sum_{r=0}^{|c|-1} (-1)^{r+[ar/c]} ((br/c)).
/// Requires c != 0.
Rational hardy_s5_three(std::int64_t a, std::int64_t b, std::int64_t c);

/// Generalized sum
///   sum_{r=0}^{|c|-1} (-1)^r Ē_m(a(r+z)/c - x) B̄_n(b(r+z)/c - y).
/// Requires spec.c != 0.
Rational generalized_s5(const SumSpec& spec);

}  // namespace hbsum
