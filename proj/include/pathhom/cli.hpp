#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathhom {

/* Parses and executes one CLI invocation; args exclude the program name.
   Exit codes: 0 computed or verified, 1 verification failure or
   counterexample, 2 usage or input error. */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pathhom
