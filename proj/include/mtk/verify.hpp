// Bundled invariant suites (exterior-algebra identities, constraint
// attractivity, analytic oracles) reported as pass/fail lines; shared by
// the CLI verify command and the test harness.
#pragma once

#include <string>
#include <vector>

namespace mtk {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;  // worst-case error or failure reason
};

// suite in {"exterior", "attractivity", "oracles", "all"}.
std::vector<SuiteResult> run_verify_suite(const std::string& suite);

}  // namespace mtk
