#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sfvs {

struct VerifyParams {
  int trials = 200;
  int n_max = 16;
  int k_max = 3;
  std::uint64_t seed = 1;
};

struct VerifySummary {
  int trials = 0;
  int yes = 0;
  int no = 0;
  int mismatches = 0;
  int bound_violations = 0;
  int bound_checks = 0;
  int kernel_bound_checks = 0;
  int rule_fixpoints = 0;
  std::array<long long, 11> fired{};
  std::map<std::string, int> models;
  std::vector<std::string> failures;

  bool ok() const { return mismatches == 0 && bound_violations == 0 && failures.empty(); }
  std::string text() const;
};

/// Seeded sweep: even trials use the gnm model with exact or greedy Z,
/// odd trials the bubble-forest model with its planted Z. Every trial runs
/// the full pipeline and compares exact answers on input and output, and
/// checks every bound the pipeline reports.
VerifySummary run_verify(const VerifyParams& params);

}  // namespace sfvs
