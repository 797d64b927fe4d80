#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Run the CLI (ctest working directory is the build tree) and capture stdout.
RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_stdout.txt";
  const std::string cmd = "./mtk_cli " + args + " > " + out_path + " 2>cli_test_stderr.txt";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

// Split a CSV row into fields.
std::vector<std::string> fields_of(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  if (!row.empty() && row.back() == ',') out.push_back("");
  return out;
}

}  // namespace

TEST_CASE("scan scalar_rd: header, index staircase, near-root suppression") {
  const RunResult r = run_cli(
      "scan --problem scalar_rd --lambda-min -0.95 --lambda-max 2 --grid 60 "
      "--method both");
  CHECK(r.exit_code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 61);
  CHECK(ls[0] == "lambda,evans,maslov,crossings,drift");
  // The Maslov column steps 3 -> 2 -> 1 -> 0 across the roots; near-root rows
  // leave the column empty.
  std::vector<int> seen;
  int suppressed = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields_of(ls[i]);
    REQUIRE(f.size() == 5);
    if (f[2].empty()) {
      ++suppressed;
      continue;
    }
    const int m = std::stoi(f[2]);
    if (seen.empty() || seen.back() != m) seen.push_back(m);
  }
  CHECK(seen == std::vector<int>{3, 2, 1, 0});
  CHECK(suppressed >= 1);  // the grid hits lambda = 0 exactly
}

TEST_CASE("scan CSV is byte-stable across reruns") {
  const std::string args =
      "scan --problem scalar_rd --lambda-min 0.3 --lambda-max 0.9 --grid 7";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("scan JSON output parses and matches the CSV schema") {
  const RunResult r = run_cli(
      "scan --problem scalar_rd --lambda-min 0.3 --lambda-max 0.9 --grid 5 "
      "--format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 5);
  for (const auto& o : arr) {
    CHECK(o.contains("lambda"));
    CHECK(o.contains("evans"));
    CHECK(o.contains("maslov"));
    CHECK(o.contains("crossings"));
    CHECK(o.contains("drift"));
  }
  CHECK(arr[0]["maslov"].get<int>() == 1);
}

TEST_CASE("exit codes: essential spectrum 3, bad input 2") {
  CHECK(run_cli("scan --problem scalar_rd --lambda-min -2 --lambda-max -1.5 "
                "--grid 8").exit_code == 3);
  CHECK(run_cli("scan --problem no_such_problem --lambda-min 0 --lambda-max 1 "
                "--grid 8").exit_code == 2);
  CHECK(run_cli("wave --P -3 --c 1 --q 1 --out cli_test_wave.csv").exit_code == 2);
}

TEST_CASE("wave subcommand writes the profile CSV") {
  const RunResult r =
      run_cli("wave --P 2.1666666666666666667 --c 1 --q 1 --explicit "
              "--out cli_test_wave.csv");
  CHECK(r.exit_code == 0);
  std::ifstream f("cli_test_wave.csv");
  std::string header;
  REQUIRE(std::getline(f, header));
  CHECK(header == "x,phi,phi1,phi2,phi3");
  // Find the x = 0 row and check phi(0) = 35/24.
  std::string line;
  bool found = false;
  while (std::getline(f, line)) {
    const auto cols = fields_of(line);
    if (cols.size() == 5 && std::abs(std::stod(cols[0])) < 1e-15) {
      CHECK(std::stod(cols[1]) == doctest::Approx(35.0 / 24).epsilon(1e-12));
      found = true;
    }
  }
  CHECK(found);
  std::remove("cli_test_wave.csv");
}

TEST_CASE("wave subcommand shoots when --explicit is absent") {
  const RunResult r = run_cli("wave --P 2 --c 1 --q 1 --out cli_test_shot.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("profile accepted") != std::string::npos);
  std::remove("cli_test_shot.csv");
}

TEST_CASE("verify --suite exterior passes") {
  const RunResult r = run_cli("verify --suite exterior");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
