#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmf::cli {

// Subcommand dispatcher used by the qmf binary (and directly by tests).
// Exit codes: 0 success, 1 domain error, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace qmf::cli
