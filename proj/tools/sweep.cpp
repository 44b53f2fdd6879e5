#include "sweep.hpp"

#include "hbsum/polys.hpp"
#include "hbsum/report_io.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

namespace hbsum::cli {

std::vector<std::int64_t> parse_int_axis(const std::string& spec) {
  std::vector<std::int64_t> out;
  if (spec.find(':') != std::string::npos) {
    std::int64_t start = 0, stop = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> start >> c1 >> stop) || c1 != ':') {
      throw ParseError("invalid integer range: '" + spec + "'");
    }
    if (is >> c2) {
      if (c2 != ':' || !(is >> step)) {
        throw ParseError("invalid integer range: '" + spec + "'");
      }
    }
    std::string rest;
    if (is >> rest) throw ParseError("invalid integer range: '" + spec + "'");
    if (step <= 0) throw ParseError("range step must be positive: '" + spec + "'");
    for (std::int64_t v = start; v <= stop; v += step) out.push_back(v);
  } else {
    std::string item;
    std::istringstream is(spec);
    while (std::getline(is, item, ',')) {
      if (item.empty()) throw ParseError("empty item in list: '" + spec + "'");
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw ParseError("invalid integer: '" + item + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_axis(const std::string& spec) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream is(spec);
  while (std::getline(is, item, ',')) {
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw ParseError("empty rational list");
  return out;
}

namespace {

bool odd(std::int64_t v) { return v % 2 != 0; }

bool coprime(std::int64_t a, std::int64_t b) {
  return gcd_int(Int(a), Int(b)) == 1;
}

bool admissible(IdentityId id, const SumSpec& s) {
  switch (id) {
    case IdentityId::dedekind_12:
      return s.a > 0 && s.b > 0 && coprime(s.a, s.b);
    case IdentityId::hardy_13:
      return s.a > 0 && s.b > 0 && odd(s.a) && odd(s.b) && coprime(s.a, s.b);
    case IdentityId::cor_12:
      return s.a > 0 && s.b > 0 && odd(s.a) && odd(s.b);
    case IdentityId::thm_11:
      return odd(s.a) && odd(s.b) && s.m >= 0 && s.n >= 0;
    case IdentityId::thm_13:
      return odd(s.a) && odd(s.b) && s.c != 0 && s.m >= 0 && s.n >= 0;
    case IdentityId::cor_14:
      return s.a > 0 && s.b > 0 && s.c > 0 && odd(s.a) && odd(s.b) &&
             coprime(s.a, s.b) && coprime(s.b, s.c) && coprime(s.a, s.c);
  }
  return false;
}

// axes an identity actually varies; the rest stay at their first value
struct AxisUse {
  bool m, n, c, xyz;
};

AxisUse axis_use(IdentityId id) {
  switch (id) {
    case IdentityId::dedekind_12:
    case IdentityId::hardy_13:
    case IdentityId::cor_12:
      return {false, false, false, false};
    case IdentityId::thm_11:
      return {true, true, false, true};
    case IdentityId::thm_13:
      return {true, true, true, true};
    case IdentityId::cor_14:
      return {false, false, true, false};
  }
  return {true, true, true, true};
}

VerificationReport evaluate(IdentityId id, const SumSpec& s) {
  switch (id) {
    case IdentityId::dedekind_12: return verify_dedekind(s.a, s.b);
    case IdentityId::hardy_13: return verify_hardy(s.a, s.b);
    case IdentityId::cor_12: return verify_cor12(s.a, s.b);
    case IdentityId::thm_11:
      return verify_thm11(s.m, s.n, s.a, s.b, s.x, s.y, s.z);
    case IdentityId::thm_13:
      return verify_thm13(s.m, s.n, s.a, s.b, s.c, s.x, s.y, s.z);
    case IdentityId::cor_14: return verify_cor14(s.a, s.b, s.c);
  }
  throw DomainError("unknown identity");
}

template <typename T>
std::vector<T> head_if(const std::vector<T>& v, bool used) {
  if (used || v.empty()) return v;
  return {v.front()};
}

}  // namespace

std::vector<SumSpec> enumerate_instances(const SweepGrid& grid,
                                         std::int64_t* skipped) {
  const AxisUse use = axis_use(grid.identity);
  const auto ms = head_if(grid.m, use.m);
  const auto ns = head_if(grid.n, use.n);
  const auto cs = head_if(grid.c, use.c);
  const auto xs = head_if(grid.x, use.xyz);
  const auto ys = head_if(grid.y, use.xyz);
  const auto zs = head_if(grid.z, use.xyz);

  std::vector<SumSpec> instances;
  std::int64_t skip_count = 0;
  for (std::int64_t m : ms)
    for (std::int64_t n : ns)
      for (std::int64_t a : grid.a)
        for (std::int64_t b : grid.b)
          for (std::int64_t c : cs)
            for (const Rational& x : xs)
              for (const Rational& y : ys)
                for (const Rational& z : zs) {
                  SumSpec s{m, n, a, b, c, x, y, z};
                  if (admissible(grid.identity, s)) {
                    instances.push_back(std::move(s));
                  } else {
                    ++skip_count;
                  }
                }
  if (skipped) *skipped = skip_count;
  return instances;
}

SweepSummary run_sweep(const SweepGrid& grid, std::ostream& out) {
  SweepSummary summary;
  std::vector<SumSpec> instances = enumerate_instances(grid, &summary.skipped);

  std::int64_t max_order = 1;
  for (std::int64_t m : grid.m)
    for (std::int64_t n : grid.n) max_order = std::max(max_order, m + n + 1);
  warm_poly_table(std::min(max_order, poly_order_cap()));

  std::vector<VerificationReport> reports(instances.size());
  unsigned jobs = grid.jobs > 0 ? static_cast<unsigned>(grid.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, instances.empty() ? 1 : instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      reports[i] = evaluate(grid.identity, instances[i]);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (grid.corrupt_row && *grid.corrupt_row >= 0 &&
      static_cast<std::size_t>(*grid.corrupt_row) < reports.size()) {
    auto& r = reports[static_cast<std::size_t>(*grid.corrupt_row)];
    r.lhs += 1;
    r.residual = r.lhs - r.rhs;
    r.verified = r.residual == 0;
  }

  for (const auto& r : reports) {
    if (r.verified) {
      ++summary.verified;
    } else {
      ++summary.failed;
    }
  }

  if (grid.format == OutputFormat::csv) {
    out << kReportCsvHeader << '\n';
    for (const auto& r : reports) out << report_csv_row(r) << '\n';
  } else {
    out << reports_json(reports) << '\n';
  }
  return summary;
}

}  // namespace hbsum::cli
