#pragma once

namespace cascade_kit::cli {

// Full command-line surface; returns the process exit code
// (0 success/certified, 1 inconclusive findings, 2 invalid input).
int run(int argc, const char* const* argv);

} // namespace cascade_kit::cli
