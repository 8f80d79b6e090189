#pragma once

namespace geogen::cli {

// Parses argv and dispatches to the subcommands. Returns the process exit
// code: 0 full success, 1 domain failure, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace geogen::cli
