#ifndef CATMOVES_VERIFY_HPP
#define CATMOVES_VERIFY_HPP

#include <string>
#include <vector>

#include "catmoves/enumeration.hpp"

namespace catmoves {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured summary, or the counterexample on failure
};

/// max_n bounds the exhaustive sweeps: trees up to max_n edges, tableau
/// shapes up to max_n + 1 cells.
struct VerifyOptions {
  int max_n = 7;
  int workers = 1;
  Caps caps{};
};

std::vector<std::string> verify_suite_names();

/// Runs one named suite ("all" chains every suite). Unknown names throw
/// ParseError.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace catmoves

#endif  // CATMOVES_VERIFY_HPP
