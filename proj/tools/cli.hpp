#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mspit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUnreachable = 3;
inline constexpr int kExitMismatch = 4;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
//
//   solve-max  FILE --budget K
//   solve-cost FILE --target D
//   verify     FILE (--budget K | --target D | --all-budgets)
//   gen        --nodes N [--seed S --wmax W --dmax D --shape NAME -o FILE]
//   bench      --sizes N1,N2,... [--trials T --seed S --budget-rule RULE --shape NAME]
//   inspect    FILE
//
// Common flags: --format text|json, --no-timing, --scale-digits D.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mspit::cli
