#include "qmf/selftest.hpp"

#include <ostream>

namespace qmf {

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  (void)progress;
  return {};
}

}  // namespace qmf
