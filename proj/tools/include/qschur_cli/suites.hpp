#pragma once

#include <string>
#include <vector>

namespace qschur::cli {

struct Params {
  int n = 3;
  int r = 1;
  int s = 1;
  int m = 3;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First few failure descriptions.
  std::vector<std::string> details;
  double elapsed_ms = 0;

  bool ok() const { return failures == 0; }
};

/// Suite names in the order `verify all` runs them.
const std::vector<std::string>& suite_registry();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const Params& p);

}  // namespace qschur::cli
