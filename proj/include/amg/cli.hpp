// The amg command line, callable in-process for tests.
#pragma once

#include <ostream>
#include <span>
#include <string>

namespace amg {

// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or input error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace amg
