#pragma once
#include <stdexcept>
#include <string>

namespace curlclean {

// Bad user input: config files, CLI flags, malformed grids.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad external data: unreadable/corrupt initial-data files, unwritable output.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Math went wrong at a grid point: singular metric, non-positive lapse,
// NaN in kernel inputs.  Message names the offending point.
struct NumericsError : std::runtime_error {
  explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace curlclean
