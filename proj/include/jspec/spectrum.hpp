#pragma once

// Bound states of the barrier-well junction: zeros zeta of the negative-energy
// matching equation, the small-zeta threshold equation and the count N(sigma).

#include <stdexcept>
#include <vector>

namespace jspec {

struct BoundState {
  int n = 0;           // threshold index: emerges at sigma_n (sigma_0 = 0)
  double zeta = 0.0;   // zeta = sqrt(-E), l = 1
  double sigma = 0.0;
};

/// Pole-free form of the bound-state equation
///   (zeta^2/(a b)) tan a tanh b + (zeta/2)(tan a / a + tanh b / b) + 1
///     - (a tan a - b tanh b)/(2 zeta) = 0,  a^2 = sigma^2 - zeta^2, b^2 = sigma^2 + zeta^2,
/// multiplied through by 2 zeta cos(a) and expressed with the even-analytic
/// helpers; the positive factor cosh(b) is also divided out. No tan and no
/// division by zeta, a or b remain. Requires 0 < zeta < sigma.
double bound_state_residual(double zeta, double sigma);

/// The bound-state equation exactly as written above (with tangents). Poles
/// where cos(a) = 0; used only to vet candidate roots.
double bound_state_equation(double zeta, double sigma);

/// Threshold form a tan a - b tanh b - 2 zeta, valid for zeta << sigma.
double threshold_residual(double sigma, double zeta);

/// All bound states for this sigma, ascending in zeta. The largest zeta
/// carries n = 0 and the most recently emerged (smallest) carries n = N.
/// sigma = 0 gives an empty list. Throws ScanResolutionError when the scan
/// grid hides a root pair, UnsupportedRangeError for sigma > 25.
std::vector<BoundState> bound_states(double sigma);

class ThresholdProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Number of bound states N + 1 for sigma_N < sigma < sigma_{N+1}; 0 at sigma = 0.
/// Throws ThresholdProximityError within 1e-9 of a resonance level.
int count_bound_states(double sigma);

struct SpectrumSample {
  double sigma = 0.0;
  double zeta = 0.0;
};

struct SpectrumCurve {
  int n = 0;
  std::vector<SpectrumSample> samples;  // ascending sigma, starting just above sigma_n
};

class BranchCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweeps sigma = step, 2 step, ... <= sigma_max and traces every branch
/// zeta_n(sigma). Curves are ordered by n.
std::vector<SpectrumCurve> spectrum_curves(double sigma_max, double step);

}  // namespace jspec
