#pragma once

#include <iosfwd>

namespace spinstress::cli {

// Exit codes: 0 success, 2 input/validation, 3 symmetry/consistency, 4 numerical.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinstress::cli
