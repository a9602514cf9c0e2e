#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octa {

// Self-contained verification suites behind the `verify` subcommand. These
// re-run the cross-method identities at runtime on the user's machine, as
// opposed to the unit tests which are fixed at build time.
struct VerifyOptions {
  int max_side = 2;  // largest side length exercised by the sweeps
  int workers = 1;
};

struct VerifySuiteResult {
  std::string name;
  bool passed = false;
  int checks = 0;
  std::string failure;  // first counterexample, empty when passed
};

// Runs all suites, streaming one "pass"/"FAIL" line per suite to `out`.
// Returns true iff every suite passed.
//
// Suites:
//   known-counts    grid sum against the recorded diagonal counts
//   closed-form     grid sum against the two-unit-side closed forms
//   symmetry        invariance under side rotation and reversal
//   oracle-sweep    every slice count against its determinant, exhaustively,
//                   plus full oracle totals
//   lower-bound     hexagon-pair product below the exact count
bool run_verify_suites(const VerifyOptions& opts, std::ostream& out,
                       std::vector<VerifySuiteResult>* results = nullptr);

}  // namespace octa
