#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digitopo::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,     // I/O, parse, usage, or an invalid component
  kDisagreement = 2,   // formula and brute-force oracle differ
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`; `in` is read when the input path is "-" or absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace digitopo::cli
