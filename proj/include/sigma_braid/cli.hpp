#pragma once

#include <ostream>

namespace sbraid {

// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sbraid
