#pragma once

// Closed-form analytics of the barrier-well junction (+sigma^2 on (-1,0),
// -sigma^2 on (0,1)): transmission T(eta, sigma), the transparency resonance
// levels tan(sigma) = tanh(sigma), their limiting transmission and the
// squared wavefunction jump across the junction.

#include <stdexcept>
#include <vector>

namespace jspec {

/// Largest interaction strength the double-precision evaluation supports.
/// Matrix entries grow like e^{sigma}; beyond this the closed forms lose
/// accuracy and inputs are rejected.
inline constexpr double kMaxSupportedSigma = 25.0;

class UnsupportedRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// alpha^2 and beta^2 of the closed forms, kept as squares so that beta^2 < 0
/// (eta > sigma) needs no branch.
struct AuxiliaryPair {
  double alpha_sq = 0.0;
  double beta_sq = 0.0;

  /// Positive-energy convention: alpha^2 = sigma^2 + eta^2, beta^2 = sigma^2 - eta^2.
  static AuxiliaryPair scattering(double eta, double sigma) noexcept {
    return {sigma * sigma + eta * eta, sigma * sigma - eta * eta};
  }
  /// Negative-energy convention: alpha^2 = sigma^2 - zeta^2, beta^2 = sigma^2 + zeta^2.
  static AuxiliaryPair bound(double zeta, double sigma) noexcept {
    return {sigma * sigma - zeta * zeta, sigma * sigma + zeta * zeta};
  }
};

/// Transmission probability of the junction at eta = l p, sigma.
/// eta must be positive; the eta -> 0 limit is left to callers.
double transmission_closed_form(double eta, double sigma);

struct ResonanceLevel {
  int n = 0;
  double sigma_n = 0.0;
  double residual = 0.0;       // tan(sigma_n) - tanh(sigma_n)
  double transmission = 0.0;   // 1 - tanh^4(sigma_n)
  double jump_ratio_sq = 0.0;  // (1 - tanh^2) / (1 + tanh^2)
};

/// tan(sigma) - tanh(sigma).
double resonance_residual(double sigma) noexcept;

/// n-th positive root of tan(sigma) = tanh(sigma), n >= 1. It is the unique
/// root in (n pi, n pi + pi/2).
double resonance_level(int n);

/// sigma_1 ... sigma_{n_max} with their limiting transmission and jump ratio.
std::vector<ResonanceLevel> resonance_levels(int n_max);

/// Limiting transmission 1 - tanh^4(sigma) at a resonance level.
double resonance_transmission(double sigma);

/// |psi(barrier side) / psi(well side)|^2 = (1 - tanh^2 sigma)/(1 + tanh^2 sigma).
double jump_ratio_sq(double sigma);

}  // namespace jspec
