#include "hbsum/report_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace hbsum {

namespace {

nlohmann::ordered_json report_to_json_obj(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(identity_name(r.identity));
  j["params"] = {
      {"m", r.params.m}, {"n", r.params.n}, {"a", r.params.a},
      {"b", r.params.b}, {"c", r.params.c}, {"x", to_string(r.params.x)},
      {"y", to_string(r.params.y)}, {"z", to_string(r.params.z)},
  };
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["residual"] = to_string(r.residual);
  j["verified"] = r.verified;
  return j;
}

}  // namespace

std::string report_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << identity_name(r.identity) << ',' << r.params.m << ',' << r.params.n
     << ',' << r.params.a << ',' << r.params.b << ',' << r.params.c << ','
     << to_string(r.params.x) << ',' << to_string(r.params.y) << ','
     << to_string(r.params.z) << ',' << to_string(r.lhs) << ','
     << to_string(r.rhs) << ',' << to_string(r.residual) << ','
     << (r.verified ? "true" : "false");
  return os.str();
}

std::string report_json(const VerificationReport& r) {
  return report_to_json_obj(r).dump();
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back(report_to_json_obj(r));
  }
  return arr.dump(2);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::int64_t parse_i64(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw ParseError("invalid integer field: '" + s + "'");
  return v;
}

}  // namespace

std::vector<ReportRow> parse_report_csv(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!saw_header) {
      std::string trimmed = line;
      while (!trimmed.empty() && trimmed.back() == '\r') trimmed.pop_back();
      if (trimmed != kReportCsvHeader) {
        throw ParseError("unexpected CSV header: '" + trimmed + "'");
      }
      saw_header = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 13) {
      throw ParseError("expected 13 CSV fields, got " + std::to_string(f.size()));
    }
    ReportRow row;
    row.identity = f[0];
    row.params.m = parse_i64(f[1]);
    row.params.n = parse_i64(f[2]);
    row.params.a = parse_i64(f[3]);
    row.params.b = parse_i64(f[4]);
    row.params.c = parse_i64(f[5]);
    row.params.x = parse_rational(f[6]);
    row.params.y = parse_rational(f[7]);
    row.params.z = parse_rational(f[8]);
    row.lhs = parse_rational(f[9]);
    row.rhs = parse_rational(f[10]);
    row.residual = parse_rational(f[11]);
    if (f[12] == "true") {
      row.verified = true;
    } else if (f[12] == "false") {
      row.verified = false;
    } else {
      throw ParseError("invalid verified field: '" + f[12] + "'");
    }
    rows.push_back(std::move(row));
  }
  if (!saw_header) throw ParseError("missing CSV header");
  return rows;
}

std::vector<ReportRow> parse_report_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open report file: " + path);
  return parse_report_csv(in);
}

namespace {

ReportRow row_from_json(const nlohmann::json& j) {
  ReportRow row;
  row.identity = j.at("identity").get<std::string>();
  const auto& p = j.at("params");
  row.params.m = p.at("m").get<std::int64_t>();
  row.params.n = p.at("n").get<std::int64_t>();
  row.params.a = p.at("a").get<std::int64_t>();
  row.params.b = p.at("b").get<std::int64_t>();
  row.params.c = p.at("c").get<std::int64_t>();
  row.params.x = parse_rational(p.at("x").get<std::string>());
  row.params.y = parse_rational(p.at("y").get<std::string>());
  row.params.z = parse_rational(p.at("z").get<std::string>());
  row.lhs = parse_rational(j.at("lhs").get<std::string>());
  row.rhs = parse_rational(j.at("rhs").get<std::string>());
  row.residual = parse_rational(j.at("residual").get<std::string>());
  row.verified = j.at("verified").get<bool>();
  return row;
}

}  // namespace

std::vector<ReportRow> parse_report_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON report: ") + e.what());
  }
  std::vector<ReportRow> rows;
  try {
    if (j.is_array()) {
      for (const auto& item : j) rows.push_back(row_from_json(item));
    } else {
      rows.push_back(row_from_json(j));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report object: ") + e.what());
  }
  return rows;
}

VerificationReport reverify(const ReportRow& row) {
  const auto id = identity_from_name(row.identity);
  if (!id) throw ParseError("unknown identity: '" + row.identity + "'");
  const SumSpec& p = row.params;
  switch (*id) {
    case IdentityId::dedekind_12: return verify_dedekind(p.a, p.b);
    case IdentityId::hardy_13: return verify_hardy(p.a, p.b);
    case IdentityId::cor_12: return verify_cor12(p.a, p.b);
    case IdentityId::thm_11: return verify_thm11(p.m, p.n, p.a, p.b, p.x, p.y, p.z);
    case IdentityId::thm_13:
      return verify_thm13(p.m, p.n, p.a, p.b, p.c, p.x, p.y, p.z);
    case IdentityId::cor_14: return verify_cor14(p.a, p.b, p.c);
  }
  throw ParseError("unknown identity: '" + row.identity + "'");
}

}  // namespace hbsum
