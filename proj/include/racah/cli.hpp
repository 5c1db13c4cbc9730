#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace racah::cli {

// Runs the command line front end.  Exit codes: 0 success, 1 verification
// failure, 2 argument error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace racah::cli
