#pragma once

#include <iosfwd>

namespace equicap {

// Exit codes: 0 ok, 1 usage, 2 math-domain, 3 convergence failure.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace equicap
