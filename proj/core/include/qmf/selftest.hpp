#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool blocking = true;
  std::string detail;
};

// Run the full acceptance suite; one entry per criterion.  When `progress`
// is given, a pass/fail line is printed per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

}  // namespace qmf
