#pragma once

#include <iosfwd>

namespace weylcheck::cli {

// Whole command line in, exit code out. Kept out of main() so tests can drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace weylcheck::cli
