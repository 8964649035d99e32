#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphsys::cli {

enum ExitCode { ok = 0, negative = 1, input_error = 2 };

/// Runs one command line (without the program name). `in` backs the file name "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sphsys::cli
