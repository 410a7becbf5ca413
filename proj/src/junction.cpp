#include <jspec/junction.hpp>

#include <jspec/roots.hpp>
#include <jspec/transfer.hpp>

#include <cmath>
#include <numbers>
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

}  // namespace

double transmission_closed_form(double eta, double sigma) {
  if (!std::isfinite(eta) || eta <= 0.0) {
    throw std::invalid_argument("transmission_closed_form requires eta > 0, got " +
                                std::to_string(eta));
  }
  check_sigma(sigma);
  const AuxiliaryPair aux = AuxiliaryPair::scattering(eta, sigma);

  // cos(a), sin(a)/a for the well; cosh(b), sinh(b)/b for the barrier.
  const double ca = even_cos(aux.alpha_sq);
  const double sa = even_sinc(aux.alpha_sq);
  const double cb = even_cos(-aux.beta_sq);
  const double sb = even_sinc(-aux.beta_sq);

  const double cc = ca * cb;
  const double ss = sa * sb;
  const double diag_minus = cc - aux.alpha_sq * ss;  // cos a cosh b - (a/b) sin a sinh b
  const double diag_plus = cc + aux.beta_sq * ss;    // cos a cosh b + (b/a) sin a sinh b
  const double off_upper = sa * cb + ca * sb;        // sin a cosh b / a + cos a sinh b / b
  // a sin a cosh b - b cos a sinh b; squared only after division by eta.
  const double off_lower = (aux.alpha_sq * sa * cb - aux.beta_sq * ca * sb) / eta;
  const double eta_upper = eta * off_upper;

  const double denom = 2.0 + diag_minus * diag_minus + diag_plus * diag_plus +
                       eta_upper * eta_upper + off_lower * off_lower;
  return 4.0 / denom;
}

double resonance_residual(double sigma) noexcept { return std::tan(sigma) - std::tanh(sigma); }

double resonance_level(int n) {
  if (n < 1) {
    throw std::invalid_argument("resonance_level: n must be >= 1");
  }
  constexpr double pi = std::numbers::pi;
  // g = tan - tanh is negative just above n pi and diverges to +inf at the pole.
  const double lo = n * pi;
  const double hi = std::nextafter(n * pi + 0.5 * pi, 0.0);
  double g_hi = resonance_residual(hi);
  double upper = hi;
  // Rounding of pi/2 can land the endpoint past the pole; back off until positive.
  for (int i = 0; g_hi <= 0.0 && i < 64; ++i) {
    upper -= 1e-12 * (i + 1);
    g_hi = resonance_residual(upper);
  }
  return bisect(resonance_residual, lo, upper, resonance_residual(lo), g_hi);
}

double resonance_transmission(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.0) {
    throw std::invalid_argument("resonance_transmission: sigma must be >= 0");
  }
  // 1 - tanh^4 = sech^2 (1 + tanh^2), free of cancellation at large sigma.
  const double sech = 1.0 / std::cosh(sigma);
  const double th = std::tanh(sigma);
  return sech * sech * (1.0 + th * th);
}

double jump_ratio_sq(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.0) {
    throw std::invalid_argument("jump_ratio_sq: sigma must be >= 0");
  }
  const double sech = 1.0 / std::cosh(sigma);
  const double th = std::tanh(sigma);
  return sech * sech / (1.0 + th * th);
}

std::vector<ResonanceLevel> resonance_levels(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("resonance_levels: n_max must be >= 1");
  }
  std::vector<ResonanceLevel> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double s = resonance_level(n);
    out.push_back({n, s, resonance_residual(s), resonance_transmission(s), jump_ratio_sq(s)});
  }
  return out;
}

}  // namespace jspec
