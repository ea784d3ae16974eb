#pragma once
#include <string>
#include <vector>

#include "curlclean/cli/config.hpp"

namespace curlclean {

// Named benchmark configurations.  Every deliberate down-scaling (grid size,
// final time) relative to the full-size experiment each preset models is
// listed in RunConfig::deviations and lands in run.json.
std::vector<std::string> preset_names();
RunConfig make_preset(const std::string& name);  // ConfigError when unknown

}  // namespace curlclean
