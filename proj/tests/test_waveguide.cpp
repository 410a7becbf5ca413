#include <doctest.h>

#include <jspec/junction.hpp>
#include <jspec/spectrum.hpp>
#include <jspec/waveguide.hpp>

#include <cmath>
#include <stdexcept>

using namespace jspec;
using doctest::Approx;

TEST_CASE("config validation") {
  CHECK_THROWS_AS(WaveguideConfig(0.0, 2.25, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(WaveguideConfig(1.0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(WaveguideConfig(1.0, 2.25, 0.0), std::invalid_argument);
  CHECK_FALSE(WaveguideConfig(1.0, 2.25, 1.0).warning().has_value());
  CHECK(WaveguideConfig(1.0, 1.0, 1.5).warning().has_value());
}

TEST_CASE("parameter mapping") {
  const WaveguideConfig cfg(1.0, 2.25, 1.0);
  const auto s = map_parameters(cfg, {2.0, 1.0});
  CHECK(s.regime == Regime::scattering);
  CHECK(s.sigma == Approx(2.0));
  CHECK(s.eta == Approx(std::sqrt(8.0)));

  const auto g = map_parameters(cfg, {2.0, 4.0});
  CHECK(g.regime == Regime::guided);
  CHECK(g.sigma == Approx(2.0));
  CHECK(g.zeta == Approx(std::sqrt(7.0)));

  CHECK(map_parameters(cfg, {2.0, 3.0}).regime == Regime::threshold);
  CHECK(map_parameters(cfg, {0.7, 0.7 * 1.5}).regime == Regime::threshold);

  const WaveguideConfig other(0.4, 3.0, 0.5);
  for (const ModePoint p : {ModePoint{1.3, 0.2}, ModePoint{1.3, 3.1}}) {
    const ModePoint back = reconstruct_point(other, map_parameters(other, p));
    CHECK(back.k == Approx(p.k).epsilon(1e-14));
    CHECK(back.q == Approx(p.q).epsilon(1e-14));
  }
  CHECK_THROWS_AS(map_parameters(cfg, {-1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("cut-offs sit on line 1 at the resonance levels") {
  const WaveguideConfig cfg(1.0, 2.25, 1.0);
  const auto cut = cutoff_points(cfg, 4);
  REQUIRE(cut.size() == 4);
  CHECK(cut[0].n == 1);
  CHECK(cut[0].k == Approx(3.9266).epsilon(1e-5));
  CHECK(cut[0].q == Approx(5.8899).epsilon(1e-5));
  const WaveguideConfig other(0.5, 2.0, 1.5);
  const auto levels = resonance_levels(4);
  const auto cut2 = cutoff_points(other, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(cut2[i].q / cut2[i].k == Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(cut2[i].k * 0.5 * std::sqrt(1.5) == Approx(levels[i].sigma_n).epsilon(1e-14));
  }
  CHECK_THROWS_AS(cutoff_points(cfg, 0), std::invalid_argument);
}

TEST_CASE("dispersion curves") {
  const WaveguideConfig cfg(1.0, 2.25, 1.0);
  SUBCASE("fundamental mode at k = 4") {
    const auto c = dispersion_curve(cfg, 0, {4.0});
    REQUIRE(c.modes.size() == 1);
    const double z0 = bound_states(4.0).back().zeta;
    CHECK(c.modes[0].q == Approx(std::sqrt(36.0 + z0 * z0)));
  }
  SUBCASE("curve starts on line 1 at its cut-off") {
    const double k1 = cutoff_points(cfg, 1)[0].k;
    const auto c = dispersion_curve(cfg, 1, {1.0, 2.0, k1, k1 + 0.5, k1 + 1.0});
    CHECK(c.below_cutoff.size() == 2);
    REQUIRE(c.modes.size() == 3);
    CHECK(c.modes[0].q == Approx(k1 * 1.5).epsilon(1e-12));
    for (std::size_t i = 1; i < c.modes.size(); ++i) {
      CHECK(c.modes[i].q > c.modes[i].k * 1.5);
    }
  }
  SUBCASE("mode beyond the range is reported empty") {
    const auto c = dispersion_curve(cfg, 3, {1.0, 2.0, 3.0});
    CHECK(c.empty());
    CHECK(c.below_cutoff.size() == 3);
  }
  CHECK_THROWS_AS(dispersion_curve(cfg, -1, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(dispersion_curve(cfg, 0, {2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("transverse transmission and sectors") {
  const WaveguideConfig cfg(1.0, 2.25, 1.0);
  const double k = 3.0;
  // Line 2: q = k sqrt(eps_b - eps_m).
  const auto on = transverse_transmission(cfg, {k, k * std::sqrt(1.25)});
  CHECK(on.sector == Sector::boundary);
  CHECK(on.eta == Approx(on.sigma));
  CHECK(on.T == Approx(transmission_closed_form(on.sigma, on.sigma)).epsilon(1e-10));

  CHECK(transverse_transmission(cfg, {k, 3.5}).sector == Sector::I);
  CHECK(transverse_transmission(cfg, {k, 1.0}).sector == Sector::II);
  CHECK(to_string(Sector::I) == "I");
  CHECK(to_string(Sector::II) == "II");
  CHECK(to_string(Sector::boundary) == "boundary");

  // Near the first cut-off, just under line 1.
  const double k1 = cutoff_points(cfg, 1)[0].k;
  const double q = k1 * 1.5 * (1.0 - 1e-12);
  const auto near = transverse_transmission(cfg, {k1, q});
  CHECK(near.T == Approx(resonance_transmission(k1)).epsilon(1e-4));

  // Vanishing modulation is a homogeneous medium.
  const WaveguideConfig weak(1.0, 2.25, 1e-14);
  CHECK(transverse_transmission(weak, {2.0, 1.0}).T == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(transverse_transmission(cfg, {2.0, 4.0}), std::invalid_argument);
  CHECK_THROWS_AS(transverse_transmission(cfg, {2.0, 3.0}), std::invalid_argument);
}
