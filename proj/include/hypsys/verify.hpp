#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypsys {

/// One checked instance of a statement.
struct CheckResult {
  std::string group;     // e.g. "compare-n"
  std::string instance;  // e.g. "n=10 k=1 k'=3"
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  /// Failures restricted to one group.
  std::size_t failures(const std::string& group) const;
  std::size_t count(const std::string& group) const;
};

/// Root comparison lemmas instantiated over their index ranges up to n_max
/// (n_max >= 7). Each instance is decided exactly.
VerifyReport verify_inequalities(int n_max);

/// Closed-form polynomials against path-built matrices, closed-form matrices
/// against path-built ones (charpoly level), and the primitivity pattern.
VerifyReport verify_families(int n_max);

/// rome_charpoly against charpoly_exact on the closed-form matrices.
VerifyReport verify_rome(int n_max);

struct ZrlSuiteOptions {
  int samples = 100;
  std::uint64_t seed = 1;
  std::vector<int> sizes{6, 7};
  /// Walk length cap for the sampler, as a multiple of n.
  int length_factor = 3;
};

/// Random pure admissible paths: normalization, θ invariance, coding
/// transitions and the central-loop fixed point.
VerifyReport verify_zrl(const ZrlSuiteOptions& opts = {});

}  // namespace hypsys
