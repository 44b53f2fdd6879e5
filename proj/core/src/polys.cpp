#include "hbsum/polys.hpp"

#include <atomic>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hbsum {

namespace {

std::vector<Rational> bernoulli_numbers_up_to(std::int64_t order) {
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(order) + 1);
  b.emplace_back(1);
  for (std::int64_t n = 1; n <= order; ++n) {
    // sum_{k=0}^{n} binom(n+1,k) B_k = 0
    Rational s = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      s += Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    }
    b.push_back(-s / Rational(n + 1));
  }
  return b;
}

}  // namespace

PolyTable PolyTable::build(std::int64_t order) {
  if (order < 0) order = 0;
  PolyTable t;
  t.max_order = order;
  // Bernoulli rows are needed one past `order` for the Euler cross-check.
  t.bernoulli_numbers = bernoulli_numbers_up_to(order + 1);

  t.bernoulli_coeff_rows.resize(static_cast<std::size_t>(order) + 2);
  for (std::int64_t n = 0; n <= order + 1; ++n) {
    auto& row = t.bernoulli_coeff_rows[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i) {
      row[static_cast<std::size_t>(i)] =
          Rational(binomial(n, n - i)) * t.bernoulli_numbers[static_cast<std::size_t>(n - i)];
    }
  }

  t.euler_coeff_rows.resize(static_cast<std::size_t>(order) + 1);
  for (std::int64_t n = 0; n <= order; ++n) {
    // E_n(x) = x^n - 1/2 sum_{k<n} binom(n,k) E_k(x)
    auto& row = t.euler_coeff_rows[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    row[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t k = 0; k < n; ++k) {
      const Rational c = Rational(binomial(n, k)) / 2;
      const auto& ek = t.euler_coeff_rows[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < ek.size(); ++i) {
        row[i] -= c * ek[i];
      }
    }
    // Independent route: E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)),
    // i.e. coeff_i = 2/(n+1) * brow_{n+1}[i] * (1 - 2^{n+1-i}).
    const auto& brow = t.bernoulli_coeff_rows[static_cast<std::size_t>(n) + 1];
    for (std::int64_t i = 0; i <= n; ++i) {
      const Rational expect = Rational(2, n + 1) * brow[static_cast<std::size_t>(i)] *
                              (Rational(1) - Rational(pow_nonneg(Int(2), n + 1 - i)));
      if (row[static_cast<std::size_t>(i)] != expect) {
        throw std::logic_error("PolyTable: Euler row " + std::to_string(n) +
                               " disagrees with the Bernoulli closed form");
      }
    }
  }

  // Trim the helper row so max_order describes both polynomial families.
  t.bernoulli_coeff_rows.resize(static_cast<std::size_t>(order) + 1);
  t.bernoulli_numbers.resize(static_cast<std::size_t>(order) + 1);
  return t;
}

std::int64_t poly_order_cap() {
  static const std::int64_t cap = [] {
    if (const char* env = std::getenv("HBSUM_MAX_ORDER")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v >= 0) return static_cast<std::int64_t>(v);
    }
    return std::int64_t{64};
  }();
  return cap;
}

namespace {

std::mutex grow_mutex;
std::atomic<const PolyTable*> current_table{nullptr};
// Retired tables stay alive so lock-free readers never chase a freed pointer.
std::vector<std::unique_ptr<const PolyTable>>& table_keepalive() {
  static std::vector<std::unique_ptr<const PolyTable>> v;
  return v;
}

}  // namespace

const PolyTable& poly_table(std::int64_t min_order) {
  if (min_order < 0) min_order = 0;
  if (min_order > poly_order_cap()) {
    throw DomainError("polynomial order " + std::to_string(min_order) +
                      " exceeds HBSUM_MAX_ORDER cap " + std::to_string(poly_order_cap()));
  }
  const PolyTable* t = current_table.load(std::memory_order_acquire);
  if (t && t->max_order >= min_order) {
    return *t;
  }
  std::lock_guard<std::mutex> lock(grow_mutex);
  t = current_table.load(std::memory_order_acquire);
  if (t && t->max_order >= min_order) {
    return *t;
  }
  // Grow geometrically so repeated small bumps do not rebuild every time.
  std::int64_t target = std::max<std::int64_t>(min_order, t ? t->max_order * 2 : 16);
  target = std::min(target, poly_order_cap());
  auto grown = std::make_unique<const PolyTable>(PolyTable::build(target));
  const PolyTable* raw = grown.get();
  table_keepalive().push_back(std::move(grown));
  current_table.store(raw, std::memory_order_release);
  return *raw;
}

void warm_poly_table(std::int64_t order) { poly_table(order); }

Rational bernoulli_number(std::int64_t j) {
  if (j < 0) throw DomainError("bernoulli_number: negative order");
  return poly_table(j).bernoulli_numbers[static_cast<std::size_t>(j)];
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational bernoulli_poly(std::int64_t n, const Rational& x) {
  if (n < 0) throw DomainError("bernoulli_poly: negative degree");
  return eval_poly(poly_table(n).bernoulli_coeff_rows[static_cast<std::size_t>(n)], x);
}

Rational euler_poly(std::int64_t n, const Rational& x) {
  if (n < 0) throw DomainError("euler_poly: negative degree");
  return eval_poly(poly_table(n).euler_coeff_rows[static_cast<std::size_t>(n)], x);
}

}  // namespace hbsum
