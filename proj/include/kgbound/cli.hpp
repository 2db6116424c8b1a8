#pragma once

#include <iosfwd>

// Command-line surface. Subcommands:
//   spectrum      enumerate closed-form levels (JSON or CSV)
//   tables        recompute reference tables 1-4 vs published values
//   wavefunction  sample one eigenfunction (CSV or JSON) with residual/nodes
//   verify        oracle / shape-invariance / PT + shifted-residual checks
// Exit codes: 0 success, 1 usage, 2 precondition violation, 3 rejected state,
// 4 verification failure. Diagnostics go to err only; records to out.
namespace kg::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace kg::cli
