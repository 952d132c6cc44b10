#pragma once

#include <iosfwd>

namespace qschur::cli {

/// Parses argv and runs one subcommand. Exit codes: 0 success,
/// 1 failed verification, 2 bad parameters or input.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qschur::cli
