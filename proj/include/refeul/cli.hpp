#pragma once

// Command-line front end. Exit codes are stable across subcommands:
//   0  computed / all checks passed
//   1  a mathematical check failed (the witness is printed)
//   2  usage or input error

#include <iosfwd>
#include <string>
#include <vector>

#include "refeul/bipoly.hpp"

namespace refeul::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows are p^0..p^dp, columns q^0..q^dq, entries right-aligned decimals.
std::string coefficient_table(const BiPoly& f);

}  // namespace refeul::cli
