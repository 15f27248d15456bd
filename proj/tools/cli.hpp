#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopf::cli {

// Runs one command line (without the program name). JSON goes to out,
// usage text and selftest progress to err. Returns the exit code: 0 on
// success, 1 for errors raised by the library, 2 for usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
