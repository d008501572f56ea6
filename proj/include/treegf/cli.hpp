#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treegf {
namespace cli {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Cross-validation battery behind the `verify` subcommand: series
/// coefficients against exhaustive enumeration (both families),
/// functional-equation residuals, the context-factor identity, the
/// R_k truncated-sum identity, census totals and probability
/// normalization.
std::vector<VerifyCheck> run_verification(const std::string& family, int n_max);

/// Entry point behind the binary: parses argv-style arguments (program
/// name excluded), writes the results to `out` and diagnostics to `err`.
/// Exit status: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace treegf
