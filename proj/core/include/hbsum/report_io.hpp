#pragma once

#include "hbsum/reciprocity.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hbsum {

/// Fixed CSV schema shared by `verify` and `sweep` outputs.
inline constexpr std::string_view kReportCsvHeader =
    "identity,m,n,a,b,c,x,y,z,lhs,rhs,residual,verified";

std::string report_csv_row(const VerificationReport& report);

/// One report as a JSON object: {identity, params{...}, lhs, rhs,
/// residual, verified}. Rationals are "p/q" strings.
std::string report_json(const VerificationReport& report);
std::string reports_json(const std::vector<VerificationReport>& reports);

/// A row parsed back from the CSV schema; `reverify` re-runs the named
/// identity on the row's parameters.
struct ReportRow {
  std::string identity;
  SumSpec params;
  Rational lhs = 0;
  Rational rhs = 0;
  Rational residual = 0;
  bool verified = false;
};

std::vector<ReportRow> parse_report_csv(std::istream& in);
std::vector<ReportRow> parse_report_csv_file(const std::string& path);

/// Accepts either a single report object or an array of them.
std::vector<ReportRow> parse_report_json(const std::string& text);

/// Re-evaluates the row's identity from its parameters. Throws ParseError
/// for an unknown identity name.
VerificationReport reverify(const ReportRow& row);

}  // namespace hbsum
