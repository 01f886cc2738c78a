#pragma once

namespace asf {

// Parses arguments, dispatches the subcommand, and returns the process
// exit code: 0 all checks pass, 1 mathematical mismatch, 2 usage error,
// 3 inconclusive within the given budget or precision.
int run_cli(int argc, const char* const* argv);

}  // namespace asf
