#pragma once

#include <ostream>

namespace entropic::tools {

// Exit codes: 0 success, 1 usage or unreadable input, 2 domain error,
// 3 numeric failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entropic::tools
