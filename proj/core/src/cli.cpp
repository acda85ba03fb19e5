#include "qmf/cli.hpp"

#include <ostream>

namespace qmf::cli {

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  (void)args;
  (void)out;
  err << "not yet wired\n";
  return 2;
}

}  // namespace qmf::cli
