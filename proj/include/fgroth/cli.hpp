#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fgroth::cli {

enum ExitCode { ok = 0, usage = 1, invariant = 2, mismatch = 3 };

/// Runs one job. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgroth::cli
