#pragma once

// Exact transfer-matrix solver for piecewise-constant potentials with delta
// scatterers. This is the brute-force oracle: it knows nothing about the
// junction closed forms and works for any PiecewisePotential.

#include <jspec/potential.hpp>
#include <jspec/roots.hpp>

#include <array>
#include <complex>
#include <vector>

namespace jspec {

/// cos(sqrt(u)) for u >= 0 and cosh(sqrt(-u)) for u < 0; entire in u.
double even_cos(double u) noexcept;
/// sin(sqrt(u))/sqrt(u) for u > 0, sinh(sqrt(-u))/sqrt(-u) for u < 0, 1 at 0.
double even_sinc(double u) noexcept;

/// Real 2x2 matrix mapping (psi, psi') at the left edge of a region to the
/// right edge, at fixed real energy.
struct TransferMatrix {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;

  static constexpr TransferMatrix identity() noexcept { return {}; }

  double determinant() const noexcept { return m11 * m22 - m12 * m21; }
  /// Largest product magnitude entering the determinant; the natural scale for
  /// rounding error in determinant().
  double determinant_scale() const noexcept;
  TransferMatrix inverse() const noexcept { return {m22, -m12, -m21, m11}; }

  /// this * rhs: first propagate with rhs, then with this.
  TransferMatrix operator*(const TransferMatrix& rhs) const noexcept;

  template <class T>
  std::array<T, 2> apply(const std::array<T, 2>& v) const {
    return {m11 * v[0] + m12 * v[1], m21 * v[0] + m22 * v[1]};
  }
};

/// Propagator for psi'' = (V - E) psi across one slab.
TransferMatrix slab_matrix(const Slab& slab, double energy) noexcept;
/// Jump psi'(+) = psi'(-) + strength * psi.
TransferMatrix delta_matrix(const DeltaScatterer& d) noexcept;
/// Ordered product over the whole support, deltas interleaved at their positions.
TransferMatrix total_matrix(const PiecewisePotential& potential, double energy);
/// Product over [x_left, x] (deltas at positions <= x included). x is clamped
/// to the support.
TransferMatrix partial_matrix(const PiecewisePotential& potential, double energy, double x);

struct ScatteringResult {
  double eta = 0.0;
  std::complex<double> t_left;
  std::complex<double> r_left;
  std::complex<double> t_right;
  std::complex<double> r_right;
  double T = 0.0;        // left incidence
  double R = 0.0;        // left incidence
  double T_right = 0.0;  // right incidence
  double R_right = 0.0;
};

/// Plane-wave scattering at energy eta^2 with unit incident amplitude from
/// either side. Phases are referenced to x = 0: psi = e^{i eta x} + r e^{-i eta x}
/// on the left and t e^{i eta x} on the right (mirrored for right incidence).
ScatteringResult scatter(const PiecewisePotential& potential, double eta);

/// Left-incidence scattering solution at x, unit incident amplitude.
std::complex<double> scattering_wavefunction(const PiecewisePotential& potential, double eta,
                                             double x);

/// zeta > 0, where the energy is -zeta^2.
class BindingParameter {
 public:
  explicit BindingParameter(double zeta);
  double value() const noexcept { return zeta_; }

 private:
  double zeta_;
};

/// Matching function F(zeta) = m21 + zeta (m11 + m22) + zeta^2 m12 with the
/// total matrix at energy -zeta^2. Zero exactly when e^{zeta x} on the left
/// connects to e^{-zeta x} on the right.
double bound_state_mismatch(const PiecewisePotential& potential, BindingParameter zeta);

struct NumericScanOptions {
  double zeta_min = 1e-6;
  double relative_step = 1e-3;  // grid step as a fraction of zeta_max
};

/// All zeros of bound_state_mismatch in (zeta_min, zeta_max), ascending.
/// Throws ScanResolutionError if the grid hides a pair of roots in one cell.
std::vector<BindingParameter> find_bound_states_numeric(const PiecewisePotential& potential,
                                                        double zeta_max,
                                                        const NumericScanOptions& opt = {});

}  // namespace jspec
