#pragma once

#include <string>
#include <vector>

namespace pbt {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // failure context, or an informational note
};

// Suites: "tables" (golden fixtures), "hopf" (algebra laws), "orders"
// (Tamari/weak-order structure), "cartan" (Gram matrices and blocks), "base"
// (word and tree module properties), "all". Checks are capped at the given
// degree; each check also has its own natural bound.
std::vector<CheckResult> run_suite(const std::string& suite, int degree);
bool all_pass(const std::vector<CheckResult>& results);

// One line per check: "suite/name: ok|FAIL detail".
std::string render_report(const std::vector<CheckResult>& results);
std::string render_report_json(const std::vector<CheckResult>& results, int degree,
                               const std::string& suite);

}  // namespace pbt
