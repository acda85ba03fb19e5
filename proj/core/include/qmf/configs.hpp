#pragma once

#include <string>
#include <vector>

#include "qmf/basis.hpp"

namespace qmf {

// Levels with a shipped configuration (also present as JSON files under
// configs/ in the source tree).
std::vector<long> shipped_levels();

const std::string& shipped_level_config_text(long N);
LevelConfig shipped_level_config(long N);
LevelConfig load_level_config_file(const std::string& path);

}  // namespace qmf
