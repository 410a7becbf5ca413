#include <jspec/transfer.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jspec {

double even_cos(double u) noexcept {
  return u >= 0.0 ? std::cos(std::sqrt(u)) : std::cosh(std::sqrt(-u));
}

double even_sinc(double u) noexcept {
  if (std::fabs(u) < 1e-3) {
    // Taylor series of sin(sqrt(u))/sqrt(u); truncation error below u^4/9!.
    return 1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0));
  }
  if (u > 0.0) {
    const double k = std::sqrt(u);
    return std::sin(k) / k;
  }
  const double k = std::sqrt(-u);
  return std::sinh(k) / k;
}

double TransferMatrix::determinant_scale() const noexcept {
  return std::max({1.0, std::fabs(m11 * m22), std::fabs(m12 * m21)});
}

TransferMatrix TransferMatrix::operator*(const TransferMatrix& b) const noexcept {
  return {m11 * b.m11 + m12 * b.m21, m11 * b.m12 + m12 * b.m22,
          m21 * b.m11 + m22 * b.m21, m21 * b.m12 + m22 * b.m22};
}

TransferMatrix slab_matrix(const Slab& slab, double energy) noexcept {
  const double k_sq = energy - slab.height;
  const double w = slab.width;
  const double c = even_cos(k_sq * w * w);
  const double s = even_sinc(k_sq * w * w);
  return {c, w * s, -k_sq * w * s, c};
}

TransferMatrix delta_matrix(const DeltaScatterer& d) noexcept {
  return {1.0, 0.0, d.strength, 1.0};
}

TransferMatrix partial_matrix(const PiecewisePotential& potential, double energy, double x_stop) {
  const auto& slabs = potential.slabs();
  const auto& deltas = potential.deltas();
  x_stop = std::clamp(x_stop, potential.x_left(), potential.x_right());

  TransferMatrix m;
  std::size_t next_delta = 0;
  auto apply_deltas_up_to = [&](double limit) {
    while (next_delta < deltas.size() && deltas[next_delta].position <= limit) {
      m = delta_matrix(deltas[next_delta]) * m;
      ++next_delta;
    }
  };
  auto propagate = [&](double from, double to, double height) {
    if (to > from) {
      m = slab_matrix(Slab{to - from, height}, energy) * m;
    }
  };

  double x = potential.x_left();
  apply_deltas_up_to(std::min(x, x_stop));
  for (const Slab& s : slabs) {
    const double edge = x + s.width;
    const double target = std::min(edge, x_stop);
    bool split = target < edge;
    while (next_delta < deltas.size() && deltas[next_delta].position < target) {
      const double pos = deltas[next_delta].position;
      propagate(x, pos, s.height);
      x = std::max(x, pos);
      apply_deltas_up_to(pos);
      split = true;
    }
    // Unsplit slabs use their own width so total_matrix matches slab_matrix exactly.
    if (split) {
      propagate(x, target, s.height);
    } else {
      m = slab_matrix(s, energy) * m;
    }
    x = target;
    if (x_stop < edge) {
      break;
    }
  }
  apply_deltas_up_to(x_stop);
  return m;
}

TransferMatrix total_matrix(const PiecewisePotential& potential, double energy) {
  return partial_matrix(potential, energy, potential.x_right());
}

namespace {

void require_positive_eta(double eta) {
  if (!std::isfinite(eta) || eta <= 0.0) {
    throw std::invalid_argument("scattering requires eta > 0 (threshold is a limit), got " +
                                std::to_string(eta));
  }
}

// Coefficients of M u_+ and M u_- in the plane-wave basis u_(+/-) = (1, +/- i eta):
// M u_- = conj(b_plus) u_+ + b_minus u_-,  M u_+ = conj(b_minus) u_+ + b_plus u_-.
struct PlaneWaveBlock {
  std::complex<double> b_minus;
  std::complex<double> b_plus;
};

PlaneWaveBlock plane_wave_block(const TransferMatrix& m, double eta) {
  const double inv_eta = 1.0 / eta;
  return {0.5 * std::complex<double>(m.m11 + m.m22, -(eta * m.m12 - m.m21 * inv_eta)),
          0.5 * std::complex<double>(m.m11 - m.m22, eta * m.m12 + m.m21 * inv_eta)};
}

std::complex<double> plane_wave(double k, double x) { return std::polar(1.0, k * x); }

}  // namespace

ScatteringResult scatter(const PiecewisePotential& potential, double eta) {
  require_positive_eta(eta);
  const TransferMatrix m = total_matrix(potential, eta * eta);
  const PlaneWaveBlock blk = plane_wave_block(m, eta);
  const std::complex<double> a = plane_wave(eta, potential.x_left());
  const std::complex<double> c = plane_wave(eta, potential.x_right());

  ScatteringResult out;
  out.eta = eta;
  out.t_left = a / (c * blk.b_minus);
  out.r_left = -a * a * blk.b_plus / blk.b_minus;
  // Right incidence: e^{-i eta x} + r' e^{i eta x} on the right, t' e^{-i eta x} on the left.
  out.t_right = 1.0 / (std::conj(a) * c * blk.b_minus);
  out.r_right = std::conj(blk.b_plus) / (c * c * blk.b_minus);

  const double denom = std::norm(blk.b_minus);
  out.T = 1.0 / denom;
  out.R = std::norm(blk.b_plus) / denom;
  out.T_right = std::norm(out.t_right);
  out.R_right = std::norm(out.r_right);
  return out;
}

std::complex<double> scattering_wavefunction(const PiecewisePotential& potential, double eta,
                                             double x) {
  require_positive_eta(eta);
  const TransferMatrix m = total_matrix(potential, eta * eta);
  const PlaneWaveBlock blk = plane_wave_block(m, eta);
  const std::complex<double> a = plane_wave(eta, potential.x_left());
  const std::complex<double> c = plane_wave(eta, potential.x_right());

  if (x <= potential.x_left()) {
    const std::complex<double> r = -a * a * blk.b_plus / blk.b_minus;
    return plane_wave(eta, x) + r * plane_wave(-eta, x);
  }
  if (x >= potential.x_right()) {
    const std::complex<double> t = a / (c * blk.b_minus);
    return t * plane_wave(eta, x);
  }
  // Left-edge state t c M^{-1}(1, i eta), written without the cancelling sum 1 + r.
  const std::complex<double> scale = a / blk.b_minus;
  const std::array<std::complex<double>, 2> left{
      scale * std::complex<double>(m.m22, -eta * m.m12),
      scale * std::complex<double>(-m.m21, eta * m.m11)};
  return partial_matrix(potential, eta * eta, x).apply(left)[0];
}

BindingParameter::BindingParameter(double zeta) : zeta_(zeta) {
  if (!std::isfinite(zeta) || zeta <= 0.0) {
    throw std::invalid_argument("binding parameter zeta must be > 0, got " + std::to_string(zeta));
  }
}

double bound_state_mismatch(const PiecewisePotential& potential, BindingParameter zeta) {
  const double z = zeta.value();
  const TransferMatrix m = total_matrix(potential, -z * z);
  return m.m21 + z * (m.m11 + m.m22) + z * z * m.m12;
}

std::vector<BindingParameter> find_bound_states_numeric(const PiecewisePotential& potential,
                                                        double zeta_max,
                                                        const NumericScanOptions& opt) {
  if (!std::isfinite(zeta_max) || zeta_max <= 0.0) {
    throw std::invalid_argument("find_bound_states_numeric: zeta_max must be > 0");
  }
  if (!(opt.relative_step > 0.0 && opt.relative_step < 1.0)) {
    throw std::invalid_argument("find_bound_states_numeric: relative_step must be in (0, 1)");
  }
  if (!(opt.zeta_min > 0.0) || opt.zeta_min >= zeta_max) {
    return {};
  }
  const auto f = [&](double z) { return bound_state_mismatch(potential, BindingParameter(z)); };
  ScanOptions scan;
  scan.cells = static_cast<std::size_t>(std::ceil((zeta_max - opt.zeta_min) /
                                                  (opt.relative_step * zeta_max)));
  const ScanResult res = scan_roots(f, opt.zeta_min, zeta_max, scan);
  if (!res.hidden_pairs.empty()) {
    throw ScanResolutionError("bound-state scan: grid too coarse, " +
                                  std::to_string(res.hidden_pairs.size()) +
                                  " cell(s) hide a pair of roots",
                              res.hidden_pairs);
  }
  std::vector<BindingParameter> out;
  out.reserve(res.roots.size());
  for (double z : res.roots) {
    if (z < zeta_max) {
      out.emplace_back(z);
    }
  }
  return out;
}

}  // namespace jspec
