#pragma once

#include <iosfwd>

namespace paramod {

// Entry point behind the `paramod` binary, exposed for in-process testing.
// Exit status: 0 on success, 1 when a verification or membership check
// fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace paramod
