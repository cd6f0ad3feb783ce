#pragma once

#include <ostream>

namespace grushin::cli {

enum ExitCode { ok = 0, failure = 1, usage = 2 };

// Runs one command line; normal output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grushin::cli
