#pragma once

// Piecewise-constant potentials on the real line, plus point (delta)
// scatterers. Units: hbar^2/2m = 1 and the regularization length l = 1, so
// heights are energies in units of 1/length^2.

#include <vector>

namespace jspec {

struct Slab {
  double width = 0.0;
  double height = 0.0;
};

/// Point scatterer `strength * delta(x - position)`.
struct DeltaScatterer {
  double position = 0.0;
  double strength = 0.0;
};

/// Dimensionless interaction strength sigma >= 0.
class Strength {
 public:
  explicit Strength(double sigma);

  double value() const noexcept { return sigma_; }
  double squared() const noexcept { return sigma_ * sigma_; }

 private:
  double sigma_;
};

/// Contiguous slabs starting at x_left, with optional delta scatterers placed
/// anywhere in [x_left, x_right]. The potential is zero outside the support.
/// Geometry is validated in the constructor and never changes afterwards.
class PiecewisePotential {
 public:
  PiecewisePotential(double x_left, std::vector<Slab> slabs,
                     std::vector<DeltaScatterer> deltas = {});

  /// Zero potential over [x_left, x_left + width].
  static PiecewisePotential free(double x_left, double width);

  double x_left() const noexcept { return x_left_; }
  double x_right() const noexcept { return x_right_; }
  double support_width() const noexcept { return x_right_ - x_left_; }

  const std::vector<Slab>& slabs() const noexcept { return slabs_; }
  /// Sorted by position; scatterers at equal positions keep insertion order.
  const std::vector<DeltaScatterer>& deltas() const noexcept { return deltas_; }

  /// Left edge of slab i (i == slabs().size() gives x_right).
  double slab_edge(std::size_t i) const;

  /// Height of the regular (slab) part at x; zero outside the support. Points
  /// on a slab boundary take the height of the slab to the right.
  double height_at(double x) const noexcept;

  /// Integral of the slab part plus the sum of delta strengths.
  double integral() const noexcept;
  double total_delta_strength() const noexcept;

  /// Image under x -> -x.
  PiecewisePotential mirrored() const;
  /// Image under V -> -V.
  PiecewisePotential negated() const;

 private:
  double x_left_;
  double x_right_;
  std::vector<Slab> slabs_;
  std::vector<DeltaScatterer> deltas_;
};

/// Barrier-well junction: +sigma^2 on (-1, 0), -sigma^2 on (0, 1).
PiecewisePotential build_barrier_well(Strength sigma);

/// Double-delta regularization sigma^2 [delta(x+1) - delta(x-1)] / 2 over a
/// zero slab on [-1, 1]. At sigma = 0 no scatterers are emitted.
PiecewisePotential build_double_delta(Strength sigma);

}  // namespace jspec
