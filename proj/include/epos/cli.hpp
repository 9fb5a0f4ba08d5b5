#pragma once

#include <ostream>

namespace epos {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification fails and 2 on usage, domain or budget errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace epos
