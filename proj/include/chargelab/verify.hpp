#pragma once

// Exhaustive small-rank verification suites, grouped into named scopes.

#include <string>
#include <vector>

namespace chargelab {

struct VerifyOptions {
  std::string scope = "all";
  // Bijection, statistic and polynomial suites.
  int a_max_n = 3, a_max_size = 4;
  int c_max_n = 2, c_max_size = 3;
  // Quantum Bruhat graph criterion sweep.
  int qbg_a_max_n = 4, qbg_c_max_n = 3;
  // Brute-force path searches.
  int path_max_n = 3;
  int jobs = 1;
  // Test hook: flips the criterion answer on one (w, root) pair.
  bool inject_qbg_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
  long checked = 0;
  double seconds = 0;
};

std::vector<std::string> verification_scopes();

// Throws ValidationError("scope") for an unknown scope name.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace chargelab
