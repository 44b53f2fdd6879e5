#pragma once

#include "hbsum/reciprocity.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hbsum::cli {

enum class OutputFormat { csv, json };

/// Parameter grid for one identity: integer axes accept "start:stop:step"
/// or comma lists, rational axes comma lists of "p/q". Instances violating
/// the identity's preconditions are filtered out and counted as skipped.
struct SweepGrid {
  IdentityId identity = IdentityId::thm_11;
  std::vector<std::int64_t> m{0};
  std::vector<std::int64_t> n{0};
  std::vector<std::int64_t> a{1};
  std::vector<std::int64_t> b{1};
  std::vector<std::int64_t> c{1};
  std::vector<Rational> x{Rational(0)};
  std::vector<Rational> y{Rational(0)};
  std::vector<Rational> z{Rational(0)};
  OutputFormat format = OutputFormat::csv;
  int jobs = 0;  // 0 = hardware concurrency
  // test-harness hook: corrupt the report at this emitted-row index
  std::optional<std::int64_t> corrupt_row;
};

struct SweepSummary {
  std::int64_t verified = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;
  std::int64_t total() const { return verified + failed + skipped; }
};

std::vector<std::int64_t> parse_int_axis(const std::string& spec);
std::vector<Rational> parse_rational_axis(const std::string& spec);

/// Enumerates the grid in lexicographic (m,n,a,b,c,x,y,z) order, filtered
/// by the identity preconditions.
std::vector<SumSpec> enumerate_instances(const SweepGrid& grid,
                                         std::int64_t* skipped);

/// Runs the sweep with a worker pool; reports are written to `out` in
/// deterministic instance order regardless of scheduling.
SweepSummary run_sweep(const SweepGrid& grid, std::ostream& out);

}  // namespace hbsum::cli
