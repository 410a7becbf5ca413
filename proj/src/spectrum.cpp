#include <jspec/spectrum.hpp>

#include <jspec/junction.hpp>
#include <jspec/roots.hpp>
#include <jspec/transfer.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace jspec {

namespace {

void check_sigma(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.0) {
    throw std::invalid_argument("sigma must be finite and >= 0, got " + std::to_string(sigma));
  }
  if (sigma > kMaxSupportedSigma) {
    throw UnsupportedRangeError("sigma = " + std::to_string(sigma) +
                                " exceeds the supported range sigma <= 25");
  }
}

// Residual without domain checks; also valid at zeta = sigma (a = 0).
double residual_unchecked(double zeta, double sigma) noexcept {
  const AuxiliaryPair aux = AuxiliaryPair::bound(zeta, sigma);
  const double ca = even_cos(aux.alpha_sq);
  const double sa = even_sinc(aux.alpha_sq);
  // tanh(b)/b; cosh(b) has been divided out of every term.
  const double tb = even_sinc(-aux.beta_sq) / even_cos(-aux.beta_sq);
  const double z2 = zeta * zeta;
  return aux.beta_sq * ca * tb - aux.alpha_sq * sa + 2.0 * zeta * ca +
         2.0 * zeta * z2 * sa * tb + z2 * (ca * tb + sa);
}

// Resonance levels below the supported sigma range, computed once.
const std::vector<double>& threshold_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    for (int n = 1;; ++n) {
      const double s = resonance_level(n);
      t.push_back(s);
      if (s > kMaxSupportedSigma) {
        break;
      }
    }
    return t;
  }();
  return table;
}

// A candidate is kept when the tangent form changes sign around it, or when a
// pole of that form (cos a = 0) sits right next to it, where only the
// multiplied-through form is meaningful.
bool vetted_by_tangent_form(double zeta, double sigma) {
  const double delta = std::min(1e-7 * sigma, 0.5 * zeta);
  const double lo = zeta - delta;
  const double hi = std::min(zeta + delta, sigma);
  if (!(hi > lo)) {
    return true;
  }
  const double cos_lo = std::cos(std::sqrt(sigma * sigma - lo * lo));
  const double cos_hi = std::cos(std::sqrt(std::max(0.0, sigma * sigma - hi * hi)));
  if (opposite_signs(cos_lo, cos_hi) || cos_lo == 0.0 || cos_hi == 0.0) {
    return true;
  }
  const double e_lo = bound_state_equation(lo, sigma);
  const double e_hi = hi < sigma ? bound_state_equation(hi, sigma) : residual_unchecked(hi, sigma);
  return opposite_signs(e_lo, e_hi) || e_lo == 0.0 || e_hi == 0.0;
}

}  // namespace

double bound_state_residual(double zeta, double sigma) {
  check_sigma(sigma);
  if (!std::isfinite(zeta) || zeta <= 0.0 || zeta >= sigma) {
    throw std::invalid_argument("bound_state_residual requires 0 < zeta < sigma");
  }
  return residual_unchecked(zeta, sigma);
}

double bound_state_equation(double zeta, double sigma) {
  if (!(zeta > 0.0) || !(zeta < sigma)) {
    throw std::invalid_argument("bound_state_equation requires 0 < zeta < sigma");
  }
  const double a = std::sqrt(sigma * sigma - zeta * zeta);
  const double b = std::sqrt(sigma * sigma + zeta * zeta);
  const double ta = std::tan(a);
  const double tb = std::tanh(b);
  const double ta_over_a = a > 0.0 ? ta / a : 1.0;
  return (zeta * zeta / b) * ta_over_a * tb + 0.5 * zeta * (ta_over_a + tb / b) + 1.0 -
         (a * ta - b * tb) / (2.0 * zeta);
}

double threshold_residual(double sigma, double zeta) {
  if (!std::isfinite(sigma) || sigma <= 0.0 || !std::isfinite(zeta) || zeta < 0.0 ||
      zeta >= sigma) {
    throw std::invalid_argument("threshold_residual requires 0 <= zeta < sigma");
  }
  const double a = std::sqrt(sigma * sigma - zeta * zeta);
  const double b = std::sqrt(sigma * sigma + zeta * zeta);
  return a * std::tan(a) - b * std::tanh(b) - 2.0 * zeta;
}

std::vector<BoundState> bound_states(double sigma) {
  check_sigma(sigma);
  if (sigma == 0.0) {
    return {};
  }
  // zeta_0 ~ sigma^4 / 3 for small sigma drops below 1e-9 sigma once sigma < ~1e-3.
  const double zeta_min = std::min(1e-9 * sigma, sigma * sigma * sigma * sigma / 30.0);
  ScanOptions opt;
  opt.cells = 2000;
  const auto f = [sigma](double z) { return residual_unchecked(z, sigma); };
  const ScanResult scan = scan_roots(f, zeta_min, sigma, opt);
  if (!scan.hidden_pairs.empty()) {
    throw ScanResolutionError("bound_states(sigma = " + std::to_string(sigma) +
                                  "): grid too coarse to separate adjacent roots",
                              scan.hidden_pairs);
  }

  std::vector<double> roots;
  for (double z : scan.roots) {
    if (z > 0.0 && z < sigma && vetted_by_tangent_form(z, sigma)) {
      roots.push_back(z);
    }
  }
  std::vector<BoundState> out;
  out.reserve(roots.size());
  const int top = static_cast<int>(roots.size()) - 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.push_back({top - static_cast<int>(i), roots[i], sigma});
  }
  return out;
}

int count_bound_states(double sigma) {
  check_sigma(sigma);
  if (sigma == 0.0) {
    return 0;
  }
  int below = 0;
  for (double s : threshold_table()) {
    if (std::fabs(sigma - s) < 1e-9) {
      throw ThresholdProximityError("sigma = " + std::to_string(sigma) +
                                    " is within 1e-9 of a resonance level; the count jumps there");
    }
    if (s < sigma) {
      ++below;
    }
  }
  return below + 1;
}

std::vector<SpectrumCurve> spectrum_curves(double sigma_max, double step) {
  if (!std::isfinite(step) || step <= 0.0) {
    throw std::invalid_argument("spectrum_curves: step must be > 0");
  }
  if (!std::isfinite(sigma_max) || sigma_max <= 0.0) {
    throw std::invalid_argument("spectrum_curves: sigma_max must be > 0");
  }
  check_sigma(sigma_max);
  const auto count = static_cast<long>(std::floor(sigma_max / step * (1.0 + 1e-12)));

  std::vector<SpectrumCurve> curves;
  std::size_t previous = 0;
  for (long k = 1; k <= count; ++k) {
    const double sigma = std::min(static_cast<double>(k) * step, sigma_max);
    const std::vector<BoundState> states = bound_states(sigma);
    if (states.size() < previous) {
      throw BranchCrossingError("spectrum_curves: branch lost between sigma = " +
                                std::to_string(sigma - step) + " and " + std::to_string(sigma));
    }
    for (std::size_t i = 1; i < states.size(); ++i) {
      if (states[i].zeta - states[i - 1].zeta <= 1e-12 * sigma) {
        throw BranchCrossingError("spectrum_curves: branches " + std::to_string(states[i].n) +
                                  " and " + std::to_string(states[i - 1].n) +
                                  " meet at sigma = " + std::to_string(sigma));
      }
    }
    previous = states.size();
    for (const BoundState& s : states) {
      while (curves.size() <= static_cast<std::size_t>(s.n)) {
        curves.push_back({static_cast<int>(curves.size()), {}});
      }
      curves[static_cast<std::size_t>(s.n)].samples.push_back({sigma, s.zeta});
    }
  }
  return curves;
}

}  // namespace jspec
