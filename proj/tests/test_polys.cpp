#include "hbsum/polys.hpp"

#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

using namespace hbsum;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (std::int64_t j = 1; j <= 6; ++j) {
    CHECK(bernoulli_number(2 * j + 1) == 0);
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(0, Rational(17, 5)) == 1);
  CHECK(bernoulli_poly(1, Rational(1, 2)) == 0);
  CHECK(bernoulli_poly(2, Rational(1, 3)) == Rational(-1, 18));
  CHECK(bernoulli_poly(2, Rational(0)) == Rational(1, 6));
}

TEST_CASE("euler polynomials") {
  CHECK(euler_poly(0, Rational(9, 7)) == 1);
  CHECK(euler_poly(1, Rational(0)) == Rational(-1, 2));
  CHECK(euler_poly(2, Rational(2, 3)) == Rational(-2, 9));
}

TEST_CASE("coefficient rows reproduce the defining special values") {
  const auto& table = poly_table(12);
  CHECK(table.bernoulli_numbers[0] == 1);
  for (std::int64_t n = 0; n <= 12; ++n) {
    // B_n(0) = B_n and E_0(x) = 1
    CHECK(bernoulli_poly(n, Rational(0)) ==
          table.bernoulli_numbers[static_cast<std::size_t>(n)]);
  }
  CHECK(table.euler_coeff_rows[0].size() == 1);
  CHECK(table.euler_coeff_rows[0][0] == 1);
  CHECK(table.max_order >= 12);
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 16);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("difference equations, exact over random points") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> deg(0, 12);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = deg(rng);
    const Rational x = random_rational(rng);
    const Rational xp = x + 1;
    const Rational pw = n == 0 ? Rational(0) : Rational(n) * pow_nonneg(x, n - 1);
    CHECK(bernoulli_poly(n, xp) - bernoulli_poly(n, x) == pw);
    CHECK(euler_poly(n, xp) + euler_poly(n, x) == Rational(2) * pow_nonneg(x, n));
  }
}

TEST_CASE("euler reflection E_n(1-x) = (-1)^n E_n(x)") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> deg(0, 12);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = deg(rng);
    const Rational x = random_rational(rng);
    const Rational lhs = euler_poly(n, Rational(1) - x);
    const Rational rhs = n % 2 == 0 ? euler_poly(n, x) : Rational(-euler_poly(n, x));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("E_{j-1}(0) = -2(2^j - 1) B_j / j for j = 1..12") {
  for (std::int64_t j = 1; j <= 12; ++j) {
    const Rational expected = Rational(Int(-2) * (pow_nonneg(Int(2), j) - 1), Int(j)) *
                              bernoulli_number(j);
    CHECK(euler_poly(j - 1, Rational(0)) == expected);
  }
}

TEST_CASE("euler_poly agrees with the Bernoulli closed form") {
  // independent route, written here: E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
  std::mt19937_64 rng(17);
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (int i = 0; i < 50; ++i) {
      const Rational x = random_rational(rng);
      const Rational closed =
          Rational(2, n + 1) *
          (bernoulli_poly(n + 1, x) -
           Rational(pow_nonneg(Int(2), n + 1)) * bernoulli_poly(n + 1, x / 2));
      CHECK(euler_poly(n, x) == closed);
    }
  }
}

TEST_CASE("shared table serves concurrent readers while growing") {
  std::vector<std::thread> pool;
  std::atomic<int> bad{0};
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &bad] {
      std::mt19937_64 rng(1000 + t);
      std::uniform_int_distribution<std::int64_t> deg(0, 40);
      for (int i = 0; i < 400; ++i) {
        const std::int64_t n = deg(rng);
        const Rational x(static_cast<std::int64_t>(rng() % 17), 7);
        if (euler_poly(0, x) != 1) ++bad;
        if (bernoulli_poly(n, Rational(0)) != bernoulli_number(n)) ++bad;
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(bad == 0);
}

TEST_CASE("table growth is monotone and order errors are reported") {
  const auto& small = poly_table(2);
  const auto& bigger = poly_table(10);
  CHECK(bigger.max_order >= 10);
  CHECK(small.bernoulli_numbers[2] == bigger.bernoulli_numbers[2]);
  CHECK_THROWS_AS(bernoulli_number(-1), DomainError);
  CHECK_THROWS_AS(poly_table(poly_order_cap() + 1), DomainError);
  CHECK_THROWS_AS(bernoulli_poly(poly_order_cap() + 5, Rational(1, 2)), DomainError);
}
