#ifndef HEXAMOMENT_VERIFY_HPP
#define HEXAMOMENT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hexamoment/pp.hpp"

namespace hexamoment {

struct CheckResult {
  std::string name;
  std::string scope;  // dims or parameter range the check ran over
  bool pass;
  std::string detail;  // on failure: what disagreed, with both values
};

struct VerifyOptions {
  // Boxes holding at most this many plane partitions also get full
  // enumeration cross-checks; larger boxes are verified through the DP
  // marginals alone.
  std::int64_t enumeration_threshold = 10'000;
  // Adds a small offset to one probability before checking. The checks must
  // then fail; used to prove the harness can detect a broken table.
  bool inject_fault = false;
};

// Per-box checks: line sums, first moments, diagonal sums, moment split,
// table symmetry, marginal consistency, counting cross-checks.
std::vector<CheckResult> verify_box(const BoxDims& dims, const VerifyOptions& opts = {});

// Box-independent checks: hook-content generating functions, tableau mean
// norms, staircase families, the staircase<->tableau bijection, and the
// content-swap involution.
std::vector<CheckResult> verify_structures();

// verify_box over every box with sides up to max_side, plus the structure
// checks.
std::vector<CheckResult> verify_sweep(int max_side, const VerifyOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace hexamoment

#endif  // HEXAMOMENT_VERIFY_HPP
