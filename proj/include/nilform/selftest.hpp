#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilform::selftest {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance battery. Deterministic: every criterion seeds its
// own generator.
std::vector<CriterionResult> run_acceptance();

// Prints one PASS/FAIL line per criterion. Returns the number of failures.
int run_and_report(std::ostream& out);

}  // namespace nilform::selftest
