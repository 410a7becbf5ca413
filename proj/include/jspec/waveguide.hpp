#pragma once

// TE modes of the antisymmetric dielectric step layer:
//   eps(x) = eps_b - eps_m on [-a, 0),  eps_b + eps_m on (0, a],  eps_b outside.
// E'' + k^2 eps(x) E = q^2 E maps onto the barrier-well junction with
// sigma^2 = k^2 a^2 eps_m and energy a^2 (k^2 eps_b - q^2), so the junction and
// spectrum modules are reused with l = a. Everything is in wave number k.

#include <optional>
#include <string>
#include <vector>

namespace jspec {

class WaveguideConfig {
 public:
  WaveguideConfig(double a, double eps_b, double eps_m);

  double a() const noexcept { return a_; }
  double eps_b() const noexcept { return eps_b_; }
  double eps_m() const noexcept { return eps_m_; }

  /// eps_b - eps_m <= 0: no propagating sector II. Allowed, but callers
  /// should surface this warning.
  std::optional<std::string> warning() const;

 private:
  double a_;
  double eps_b_;
  double eps_m_;
};

struct ModePoint {
  double k = 0.0;
  double q = 0.0;
};

enum class Regime { guided, scattering, threshold };

struct MappedParameters {
  double sigma = 0.0;
  Regime regime = Regime::threshold;
  double eta = 0.0;   // scattering only
  double zeta = 0.0;  // guided only
};

MappedParameters map_parameters(const WaveguideConfig& config, const ModePoint& point);

/// Inverse of map_parameters on each regime.
ModePoint reconstruct_point(const WaveguideConfig& config, const MappedParameters& mapped);

struct CutoffPoint {
  int n = 0;
  double k = 0.0;
  double q = 0.0;
};

/// (k_n, q_n^0) for n = 1..n_max; every point lies on q = k sqrt(eps_b).
std::vector<CutoffPoint> cutoff_points(const WaveguideConfig& config, int n_max);

struct DispersionCurve {
  int n = 0;
  std::vector<ModePoint> modes;
  std::vector<double> below_cutoff;  // k samples where mode n does not exist yet

  bool empty() const noexcept { return modes.empty(); }
};

/// q_n(k) = sqrt(k^2 eps_b + zeta_n(k a sqrt(eps_m))^2 / a^2) for every sample
/// at or above the cutoff of mode n. k_samples must be ascending and positive.
DispersionCurve dispersion_curve(const WaveguideConfig& config, int n,
                                 const std::vector<double>& k_samples);

enum class Sector { I, II, boundary };

std::string to_string(Sector s);

struct TransverseTransmission {
  double T = 0.0;
  Sector sector = Sector::boundary;
  double eta = 0.0;
  double sigma = 0.0;
};

/// Transmission across the layer for a point strictly below q = k sqrt(eps_b).
/// Sector I: eta < sigma, II: eta > sigma; equality (within 1e-12 relative)
/// is the boundary line q = k sqrt(eps_b - eps_m).
TransverseTransmission transverse_transmission(const WaveguideConfig& config,
                                               const ModePoint& point);

}  // namespace jspec
