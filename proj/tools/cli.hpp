#pragma once

namespace prmlcc::cli {

/// Runs one invocation of the command line tool.
/// Exit codes: 0 success, 1 usage or input error, 2 declared decode failure.
int dispatch(int argc, const char* const* argv);

}  // namespace prmlcc::cli
