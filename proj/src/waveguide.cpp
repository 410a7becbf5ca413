#include <jspec/waveguide.hpp>

#include <jspec/junction.hpp>
#include <jspec/spectrum.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jspec {

WaveguideConfig::WaveguideConfig(double a, double eps_b, double eps_m)
    : a_(a), eps_b_(eps_b), eps_m_(eps_m) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw std::invalid_argument("waveguide: half-width a must be > 0");
  }
  if (!std::isfinite(eps_b) || eps_b <= 0.0) {
    throw std::invalid_argument("waveguide: eps_b must be > 0");
  }
  if (!std::isfinite(eps_m) || eps_m <= 0.0) {
    throw std::invalid_argument("waveguide: eps_m must be > 0");
  }
}

std::optional<std::string> WaveguideConfig::warning() const {
  if (eps_b_ - eps_m_ <= 0.0) {
    return "eps_b - eps_m <= 0: the layer minimum is non-positive and sector II is absent";
  }
  return std::nullopt;
}

MappedParameters map_parameters(const WaveguideConfig& config, const ModePoint& point) {
  if (!(point.k >= 0.0) || !(point.q >= 0.0) || !std::isfinite(point.k) ||
      !std::isfinite(point.q)) {
    throw std::invalid_argument("waveguide: k and q must be finite and non-negative");
  }
  MappedParameters out;
  out.sigma = point.k * config.a() * std::sqrt(config.eps_m());
  const double light_line = point.k * point.k * config.eps_b();
  const double q_sq = point.q * point.q;
  const double gap = light_line - q_sq;
  // Rounding in q = k sqrt(eps_b) must still classify as the threshold line.
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(light_line, q_sq);
  if (std::fabs(gap) <= tol) {
    out.regime = Regime::threshold;
  } else if (gap > 0.0) {
    out.regime = Regime::scattering;
    out.eta = config.a() * std::sqrt(gap);
  } else {
    out.regime = Regime::guided;
    out.zeta = config.a() * std::sqrt(-gap);
  }
  return out;
}

ModePoint reconstruct_point(const WaveguideConfig& config, const MappedParameters& mapped) {
  const double k = mapped.sigma / (config.a() * std::sqrt(config.eps_m()));
  const double light_line = k * k * config.eps_b();
  const double a_sq = config.a() * config.a();
  double q_sq = light_line;
  if (mapped.regime == Regime::scattering) {
    q_sq -= mapped.eta * mapped.eta / a_sq;
  } else if (mapped.regime == Regime::guided) {
    q_sq += mapped.zeta * mapped.zeta / a_sq;
  }
  return {k, std::sqrt(std::max(0.0, q_sq))};
}

std::vector<CutoffPoint> cutoff_points(const WaveguideConfig& config, int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("cutoff_points: n_max must be >= 1");
  }
  std::vector<CutoffPoint> out;
  for (const ResonanceLevel& level : resonance_levels(n_max)) {
    const double k = level.sigma_n / (config.a() * std::sqrt(config.eps_m()));
    out.push_back({level.n, k, k * std::sqrt(config.eps_b())});
  }
  return out;
}

DispersionCurve dispersion_curve(const WaveguideConfig& config, int n,
                                 const std::vector<double>& k_samples) {
  if (n < 0) {
    throw std::invalid_argument("dispersion_curve: mode index must be >= 0");
  }
  for (std::size_t i = 0; i < k_samples.size(); ++i) {
    if (!(k_samples[i] > 0.0) || !std::isfinite(k_samples[i]) ||
        (i > 0 && k_samples[i] < k_samples[i - 1])) {
      throw std::invalid_argument("dispersion_curve: k samples must be positive and ascending");
    }
  }
  const double threshold = n == 0 ? 0.0 : resonance_level(n);
  const double scale = config.a() * std::sqrt(config.eps_m());

  DispersionCurve curve;
  curve.n = n;
  for (double k : k_samples) {
    const double sigma = k * scale;
    const double light_q = k * std::sqrt(config.eps_b());
    if (n > 0 && std::fabs(sigma - threshold) <= 1e-12 * threshold) {
      curve.modes.push_back({k, light_q});  // zeta_n(sigma_n) = 0
      continue;
    }
    if (sigma < threshold) {
      curve.below_cutoff.push_back(k);
      continue;
    }
    std::optional<double> zeta;
    for (const BoundState& s : bound_states(sigma)) {
      if (s.n == n) {
        zeta = s.zeta;
      }
    }
    if (!zeta) {
      // Too close above threshold for the scan to resolve; treat as not yet bound.
      curve.below_cutoff.push_back(k);
      continue;
    }
    const double z = *zeta / config.a();
    curve.modes.push_back({k, std::sqrt(light_q * light_q + z * z)});
  }
  return curve;
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::I:
      return "I";
    case Sector::II:
      return "II";
    case Sector::boundary:
      return "boundary";
  }
  return "?";
}

TransverseTransmission transverse_transmission(const WaveguideConfig& config,
                                               const ModePoint& point) {
  const MappedParameters mapped = map_parameters(config, point);
  if (mapped.regime != Regime::scattering) {
    throw std::invalid_argument(
        "transverse_transmission: point is not below q = k sqrt(eps_b); use dispersion_curve");
  }
  TransverseTransmission out;
  out.eta = mapped.eta;
  out.sigma = mapped.sigma;
  const double beta_sq = AuxiliaryPair::scattering(mapped.eta, mapped.sigma).beta_sq;
  const double scale = mapped.sigma * mapped.sigma + mapped.eta * mapped.eta;
  if (std::fabs(beta_sq) <= 1e-12 * scale) {
    out.sector = Sector::boundary;
  } else {
    out.sector = beta_sq > 0.0 ? Sector::I : Sector::II;
  }
  out.T = transmission_closed_form(mapped.eta, mapped.sigma);
  return out;
}

}  // namespace jspec
