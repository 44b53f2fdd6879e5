#include "hbsum/report_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

std::string hbsum_bin() {
  const char* bin = std::getenv("HBSUM_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "HBSUM_BIN must point at the hbsum binary");
  return bin;
}

CmdResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + hbsum_bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) {
    res.output.append(buf, got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() /
          (stem + "." + std::to_string(::getpid()) + ".csv"))
      .string();
}

}  // namespace

TEST_CASE("cli compute prints exact rationals") {
  auto r = run("compute s5 --a 3 --b 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4/5\n");

  r = run("compute dedekind --a 1 --b 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/18\n");

  r = run("compute gen --m 0 --n 1 --a 1 --b 1 --c 1 --x 0 --y 0 --z 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n");

  r = run("compute s5-three --a 3 --b 2 --c 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-2/5\n");
}

TEST_CASE("cli compute maps domain errors to exit 2") {
  CHECK(run("compute dedekind --a 1 --b 0").exit_code == 2);
  CHECK(run("compute gen --m 0 --n 0 --a 1 --b 1 --c 0").exit_code == 2);
  CHECK(run("compute s5 --a 1").exit_code == 2);         // missing required flag
  CHECK(run("compute mystery --a 1 --b 2").exit_code == 2);
}

TEST_CASE("cli verify exit codes") {
  CHECK(run("verify hardy --a 3 --b 5").exit_code == 0);
  CHECK(run("verify thm11 --m 0 --n 0 --a 1 --b 1 --x 0 --y 0 --z 0").exit_code == 0);
  CHECK(run("verify hardy --a 2 --b 5").exit_code == 2);  // parity precondition
  CHECK(run("verify thm13 --m 1 --n 1 --a 3 --b 5 --c -2").exit_code == 0);
  CHECK(run("verify cor14 --a 3 --b 5 --c 2").exit_code == 0);
  CHECK(run("verify dedekind --a 7 --b 30").exit_code == 0);
  CHECK(run("verify thm11 --m 0 --n 0 --a 1 --b 1 --x 0.5").exit_code == 2);  // no decimals
}

TEST_CASE("cli verify emits report text and json") {
  auto r = run("verify hardy --a 3 --b 5");
  CHECK(r.output.find("lhs:      7/15") != std::string::npos);
  CHECK(r.output.find("residual: 0") != std::string::npos);
  CHECK(r.output.find("verified: true") != std::string::npos);

  r = run("--json verify hardy --a 3 --b 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"identity\":\"hardy_13\"") != std::string::npos);
  CHECK(r.output.find("\"verified\":true") != std::string::npos);
}

TEST_CASE("cli check subcommands") {
  auto r = run("check lemma25 --j 2 --b 1 --r 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("deviation:") != std::string::npos);
  CHECK(r.output.find("passed") != std::string::npos);

  r = run("check lemma25 --j 1 --b 2 --r 1 --max-terms 10");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("non-convergence") != std::string::npos);

  CHECK(run("check lemma24 --j 1 --r 1 --b 3").exit_code == 0);
  CHECK(run("check lemma24 --j 2 --point 1/3").exit_code == 2);
  CHECK(run("check lemma27 --j 2 --b 1 --r 0 --x 1/3").exit_code == 0);
  CHECK(run("check ebar-fourier --n 1 --x 1/4 --terms 10000").exit_code == 0);
  CHECK(run("check bbar-fourier --n 2 --x 1/3 --terms 10000").exit_code == 0);
  CHECK(run("check identities --count 200").exit_code == 0);
}

TEST_CASE("cli polys dumps csv tables") {
  auto r = run("polys --table bernoulli --max-order 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order,value\n") == 0);
  CHECK(r.output.find("1,-1/2") != std::string::npos);
  CHECK(r.output.find("6,1/42") != std::string::npos);

  r = run("polys --table euler0 --max-order 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1,-1/2") != std::string::npos);
  CHECK(r.output.find("3,1/4") != std::string::npos);

  CHECK(run("polys --table euler0 --max-order 20", "HBSUM_MAX_ORDER=8 ").exit_code == 2);
}

TEST_CASE("cli sweep writes deterministic reports and round-trips") {
  const std::string path = temp_path("sweep_hardy");
  auto r = run("sweep --identity hardy_13 --a 1:9:2 --b 1:9:2 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("failed=0") != std::string::npos);
  CHECK(r.output.find("skipped=") != std::string::npos);

  const auto rows = hbsum::parse_report_csv_file(path);
  CHECK(rows.size() > 0);
  for (const auto& row : rows) {
    const auto again = hbsum::reverify(row);
    CHECK(again.residual == row.residual);
    CHECK(again.verified == row.verified);
    CHECK(row.verified);
  }

  // identical run under --jobs 1 must produce byte-identical rows
  const std::string path1 = temp_path("sweep_hardy_serial");
  auto r1 = run("--jobs 1 sweep --identity hardy_13 --a 1:9:2 --b 1:9:2 --out " + path1);
  CHECK(r1.exit_code == 0);
  std::ifstream f0(path), f1(path1);
  const std::string c0((std::istreambuf_iterator<char>(f0)), {});
  const std::string c1((std::istreambuf_iterator<char>(f1)), {});
  CHECK(c0 == c1);
  std::filesystem::remove(path);
  std::filesystem::remove(path1);
}

TEST_CASE("cli sweep guards empty grids and corrupted rows") {
  CHECK(run("sweep --identity hardy_13 --a 2:2:1 --b 2:2:1").exit_code == 2);

  const std::string path = temp_path("sweep_corrupt");
  auto r = run("sweep --identity hardy_13 --a 1:5:2 --b 1:5:2 --corrupt-row 3 --out " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("failed=1") != std::string::npos);
  const auto rows = hbsum::parse_report_csv_file(path);
  std::size_t bad = 0;
  for (const auto& row : rows) {
    if (!row.verified) ++bad;
  }
  CHECK(bad == 1);
  std::filesystem::remove(path);
}

TEST_CASE("cli sweep emits json when asked") {
  auto r = run("sweep --identity cor_14 --a 3 --b 5 --c 1:4:1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"identity\": \"cor_14\"") != std::string::npos);
}
