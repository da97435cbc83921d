#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace outbreak::cli {

/// Entry point shared by the executable and the tests. Returns the process
/// exit code; diagnostics go to `err`, and outputs without `--out` go to
/// `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace outbreak::cli
