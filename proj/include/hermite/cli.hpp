#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hermite {

// Entry point of the command line tool, factored out for testing.  Takes the
// argument list without the program name.  Returns 0 on success, 1 on a
// mathematical failure (a condition that does not hold, a factorization that
// does not exist, no certificate within the iteration budget), 2 on usage or
// parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace hermite
