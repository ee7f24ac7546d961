#pragma once

#include <string>
#include <vector>

namespace sylow {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  void add(std::string name, bool pass, std::string detail = {});
  bool ok() const;
  std::size_t failure_count() const;
};

// lr-props, table1, table2-slices, n30, base-lemmas, multiplicities, ratio,
// hook-restriction, predictor, invariants.
const std::vector<std::string>& suite_names();
VerifyReport run_suite(const std::string& name);

}  // namespace sylow
