#pragma once

// Cross-checks of every closed form against the transfer-matrix oracle, used
// by `junction-spectra verify` and by the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace jspec {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string id;           // short stable identifier, e.g. "oracle-transmission"
  std::string description;
  bool passed = false;
  std::string detail;       // measured values and thresholds
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 20010917;

// Individual checks. `full` uses the acceptance grid sizes; `quick` shrinks
// grids and case counts so the whole suite runs in a few seconds.
CheckResult check_oracle_transmission(VerifyLevel level);
CheckResult check_resonance_levels(VerifyLevel level);
CheckResult check_transparency_limit(VerifyLevel level);
CheckResult check_reflecting_wall(VerifyLevel level);
/// Jump ratio from the oracle wavefunction at the given eta.
CheckResult check_jump_ratio(double eta);
/// Relative error of the oracle jump ratio falls ~100x per decade of eta and
/// reaches the limit within 1e-3 at eta = 1e-5.
CheckResult check_jump_ratio_convergence(VerifyLevel level);
CheckResult check_bound_state_count(VerifyLevel level);
CheckResult check_bound_state_oracle(VerifyLevel level);
CheckResult check_threshold_consistency(VerifyLevel level);
CheckResult check_waveguide(VerifyLevel level);
CheckResult check_properties(VerifyLevel level, std::uint64_t seed);

/// The verify command's suite, in a fixed order.
std::vector<CheckResult> run_checks(VerifyLevel level, std::uint64_t seed = kDefaultSeed);

}  // namespace jspec
