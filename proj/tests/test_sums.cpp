#include "hbsum/sums.hpp"

#include "hbsum/periodic.hpp"

#include <doctest.h>

#include <random>

using namespace hbsum;

TEST_CASE("dedekind sum values") {
  CHECK(dedekind_sum(3, 1) == 0);
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
  CHECK_THROWS_AS(dedekind_sum(1, 0), DomainError);

  // reciprocity instance: 1/18 + 0 = -1/4 + (1/12)(1/3 + 3 + 1/3)
  const Rational lhs = dedekind_sum(1, 3) + dedekind_sum(3, 1);
  const Rational rhs =
      Rational(-1, 4) +
      (Rational(1, 3) + Rational(3) + Rational(1, 3)) / 12;
  CHECK(lhs == rhs);
}

TEST_CASE("hardy s5 values") {
  CHECK(hardy_s5(7, 1) == 0);
  CHECK(hardy_s5(-2, 1) == 0);
  CHECK(hardy_s5(1, 3) == Rational(1, 3));
  CHECK(hardy_s5(3, 5) == Rational(4, 5));
  CHECK(hardy_s5(5, 3) == Rational(-1, 3));
  CHECK_THROWS_AS(hardy_s5(1, 0), DomainError);

  // 4/5 - 1/3 = 1/2 - 1/30
  CHECK(hardy_s5(3, 5) + hardy_s5(5, 3) == Rational(1, 2) - Rational(1, 30));
}

TEST_CASE("three-argument hardy s5 values") {
  CHECK(hardy_s5_three(4, 9, 1) == 0);
  CHECK(hardy_s5_three(1, 1, 3) == hardy_s5(1, 3));
  CHECK(hardy_s5_three(3, 2, 5) == Rational(-2, 5));
  CHECK(hardy_s5_three(5, 2, 3) == Rational(1, 3));
  CHECK_THROWS_AS(hardy_s5_three(1, 1, 0), DomainError);
}

TEST_CASE("generalized sum values") {
  CHECK(generalized_s5({0, 1, 1, 1, 1, 0, 0, 0}) == 0);
  CHECK(generalized_s5({0, 1, 1, 1, 3, 0, 0, 0}) == Rational(1, 3));
  CHECK(generalized_s5({0, 1, 3, 1, 5, 0, 0, 0}) == Rational(4, 5));
  CHECK_THROWS_AS(generalized_s5({0, 1, 1, 1, 0, 0, 0, 0}), DomainError);
}

TEST_CASE("generalized sum handles the n=0 and integer-argument paths") {
  // n = 0 keeps the Bernoulli factor at 1: sum reduces to the alternating
  // Euler-factor sum
  SumSpec flat{1, 0, 3, 9, 5, Rational(1, 7), Rational(2, 3), Rational(0)};
  Rational manual = 0;
  for (std::int64_t r = 0; r < 5; ++r) {
    const Rational term =
        euler_bar(1, Rational(3) * Rational(r, 5) - Rational(1, 7));
    manual += r % 2 != 0 ? Rational(-term) : term;
  }
  CHECK(manual == Rational(3, 70));
  CHECK(generalized_s5(flat) == Rational(3, 70));

  // m = 0 with all inner Euler arguments integral: every term vanishes
  SumSpec zeroed{0, 2, 4, 1, 2, Rational(0), Rational(1, 5), Rational(0)};
  CHECK(generalized_s5(zeroed) == 0);  // a(r+z)/c = 4r/2 = 2r is an integer
}

TEST_CASE("bridge: s5(a,b) = S_{0,1}(a 1 b / 0 0 0) for odd a, b") {
  for (std::int64_t a = 1; a <= 25; a += 2) {
    for (std::int64_t b = 1; b <= 25; b += 2) {
      CHECK(hardy_s5(a, b) == generalized_s5({0, 1, a, 1, b, 0, 0, 0}));
    }
  }
}

TEST_CASE("dedekind sum has period b in a") {
  std::mt19937_64 rng(211);
  std::uniform_int_distribution<std::int64_t> av(-80, 80);
  std::uniform_int_distribution<std::int64_t> bv(1, 40);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t a = av(rng);
    std::int64_t b = bv(rng);
    if (rng() % 2 == 0) b = -b;
    CHECK(dedekind_sum(a + b, b) == dedekind_sum(a, b));
  }
}

TEST_CASE("hardy s5 depends on a modulo 2b for odd b") {
  std::mt19937_64 rng(223);
  std::uniform_int_distribution<std::int64_t> av(-60, 60);
  std::uniform_int_distribution<std::int64_t> bv(0, 14);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t a = av(rng);
    const std::int64_t b = 2 * bv(rng) + 1;  // odd
    CHECK(hardy_s5(a + 2 * b, b) == hardy_s5(a, b));
    CHECK(hardy_s5(a - 2 * b, b) == hardy_s5(a, b));
  }
}

TEST_CASE("negative moduli follow the literal residue range") {
  // r runs over 0..|c|-1 with the sign (-1)^r on the literal index r
  CHECK(hardy_s5(3, -5) == Rational(4, 5));
  CHECK(hardy_s5(-3, 5) == Rational(-4, 5));
  CHECK(generalized_s5({0, 1, 3, 1, -5, 0, 0, 0}) == Rational(4, 5));
  CHECK(generalized_s5({0, 1, -3, 1, 5, 0, 0, 0}) == Rational(-4, 5));
  CHECK(generalized_s5({0, 1, -3, -1, 5, 0, 0, 0}) == Rational(4, 5));
}
