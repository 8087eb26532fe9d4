#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "booldiff/products.hpp"

namespace booldiff::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kDimensionMismatch = 3,
  kCapacityExceeded = 4,
};

struct CliConfig {
  unsigned n_max = kDefaultMaxDimension;
  DirectCaps direct_caps;
  Route route = Route::Auto;
};

/// Reads BOOLDIFF_NMAX when set. Throws DomainError on a malformed value.
[[nodiscard]] CliConfig config_from_environment();

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace booldiff::cli
