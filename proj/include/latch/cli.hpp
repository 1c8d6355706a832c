#pragma once

#include <string>
#include <vector>

namespace latch::cli {

/// argv-style entry point (argv[0] is the program name). Exit codes:
/// 0 success, 1 usage error, 2 data/format error, 3 internal failure.
int run(int argc, const char* const* argv);

/// Same, for tests: args excludes the program name.
int run(const std::vector<std::string>& args);

} // namespace latch::cli
