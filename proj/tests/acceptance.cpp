#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "sylow/harness.hpp"

// One line per acceptance criterion; exit status 1 if any criterion fails.
int main(int argc, char** argv) {
  const std::vector<std::pair<int, std::string>> criteria{
      {1, "table1"},      {2, "base-lemmas"}, {3, "hook-restriction"},
      {4, "n30"},         {5, "lr-props"},    {6, "multiplicities"},
      {7, "predictor"},   {8, "ratio"},       {9, "invariants"},
  };
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (const auto& [id, suite] : criteria) {
    std::string line;
    try {
      const auto report = sylow::run_suite(suite);
      const auto passed = report.checks.size() - report.failure_count();
      line = "AC" + std::to_string(id) + " " + (report.ok() ? "PASS" : "FAIL") + "  " + suite + "  " +
             std::to_string(passed) + "/" + std::to_string(report.checks.size()) + " checks";
      char secs[32];
      std::snprintf(secs, sizeof secs, "  %.1f s", report.seconds);
      line += secs;
      if (!report.ok()) ++failed;
      std::cout << line << '\n';
      for (const auto& c : report.checks)
        if (verbose || !c.pass)
          std::cout << "    " << (c.pass ? "pass  " : "FAIL  ") << c.name
                    << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "AC" << id << " FAIL  " << suite << "  error: " << e.what() << '\n';
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
