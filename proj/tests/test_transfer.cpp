#include <doctest.h>

#include <jspec/junction.hpp>
#include <jspec/potential.hpp>
#include <jspec/transfer.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

using namespace jspec;
using doctest::Approx;

namespace {

// High-precision references, computed once with 50-digit arithmetic by
// direct propagation through the two slabs.
constexpr double kSigma1 = 3.9266023120479187782;

double jump_ratio_at(double eta) {
  const auto v = build_barrier_well(Strength(kSigma1));
  const std::complex<double> left = scattering_wavefunction(v, eta, -1.0);
  const std::complex<double> right = scattering_wavefunction(v, eta, 1.0);
  return std::norm(left / right);
}

}  // namespace

TEST_CASE("even helpers") {
  CHECK(even_cos(0.0) == 1.0);
  CHECK(even_sinc(0.0) == 1.0);
  CHECK(even_cos(4.0) == Approx(std::cos(2.0)));
  CHECK(even_cos(-4.0) == Approx(std::cosh(2.0)));
  CHECK(even_sinc(4.0) == Approx(std::sin(2.0) / 2.0));
  CHECK(even_sinc(-4.0) == Approx(std::sinh(2.0) / 2.0));
  // Continuous through the series switch.
  for (double u : {-1.001e-3, -0.999e-3, 0.999e-3, 1.001e-3, 1e-9, -1e-9}) {
    CAPTURE(u);
    const double r = std::sqrt(std::fabs(u));
    const double sinc = u > 0 ? std::sin(r) / r : std::sinh(r) / r;
    CHECK(even_sinc(u) == Approx(sinc).epsilon(1e-15));
  }
}

TEST_CASE("slab matrix") {
  SUBCASE("E = V on a free unit slab") {
    const auto m = slab_matrix({1.0, 0.0}, 0.0);
    CHECK(m.m11 == 1.0);
    CHECK(m.m12 == 1.0);
    CHECK(m.m21 == 0.0);
    CHECK(m.m22 == 1.0);
  }
  SUBCASE("half wavelength") {
    const double pi = std::numbers::pi;
    const auto m = slab_matrix({1.0, 0.0}, pi * pi);
    CHECK(m.m11 == Approx(-1.0));
    CHECK(m.m12 == Approx(0.0).scale(1.0));
    CHECK(m.m21 == Approx(0.0).scale(1.0));
    CHECK(m.m22 == Approx(-1.0));
  }
  SUBCASE("under a barrier") {
    const auto m = slab_matrix({1.0, 4.0}, 1.0);
    const double r3 = std::sqrt(3.0);
    CHECK(m.m11 == Approx(std::cosh(r3)));
    CHECK(m.m12 == Approx(std::sinh(r3) / r3));
    CHECK(m.m21 == Approx(3.0 * std::sinh(r3) / r3));
    CHECK(m.m22 == Approx(std::cosh(r3)));
    CHECK(m.determinant() == Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("delta matrix") {
  const auto id = delta_matrix({0.0, 0.0});
  CHECK(id.m11 == 1.0);
  CHECK(id.m21 == 0.0);
  const auto half = delta_matrix({0.3, 0.5});
  CHECK(half.m12 == 0.0);
  CHECK(half.m21 == 0.5);
  const auto both = delta_matrix({0.0, 0.25}) * delta_matrix({0.0, -1.5});
  CHECK(both.m21 == Approx(-1.25));
  CHECK(both.m11 == 1.0);
  CHECK(both.m22 == 1.0);
}

TEST_CASE("total matrix") {
  const auto free = total_matrix(PiecewisePotential(-2.0, {{0.5, 0.0}, {1.5, 0.0}}), 2.3);
  const auto one = slab_matrix({2.0, 0.0}, 2.3);
  CHECK(free.m11 == Approx(one.m11));
  CHECK(free.m12 == Approx(one.m12));
  CHECK(free.m21 == Approx(one.m21));

  const PiecewisePotential stack(0.0, {{0.3, 5.0}, {0.1, -7.0}, {0.4, 2.0}, {0.2, 0.0}, {0.5, -1.0}},
                                 {{0.35, 1.5}, {1.0, -2.0}});
  CHECK(total_matrix(stack, 7.3).determinant() == Approx(1.0).epsilon(1e-13));

  // Partial products stop at x and include the delta sitting exactly there.
  const auto upto = partial_matrix(stack, 7.3, 0.35);
  const auto direct = delta_matrix({0.35, 1.5}) * slab_matrix({0.05, -7.0}, 7.3) *
                      slab_matrix({0.3, 5.0}, 7.3);
  CHECK(upto.m11 == Approx(direct.m11));
  CHECK(upto.m21 == Approx(direct.m21));
}

TEST_CASE("scattering on simple potentials") {
  SUBCASE("free") {
    const auto r = scatter(PiecewisePotential::free(-1.0, 2.0), 1.0);
    CHECK(r.T == Approx(1.0).epsilon(1e-15));
    CHECK(r.R == Approx(0.0).scale(1.0));
    CHECK(std::abs(r.t_left - 1.0) < 1e-14);
  }
  SUBCASE("single delta g = 2 at eta = 1") {
    const PiecewisePotential v(0.0, {}, {{0.0, 2.0}});
    const auto r = scatter(v, 1.0);
    CHECK(r.T == Approx(0.5).epsilon(1e-15));
    CHECK(r.R == Approx(0.5).epsilon(1e-15));
    // t = 1 / (1 + i g / (2 eta))
    CHECK(std::abs(r.t_left - 1.0 / std::complex<double>(1.0, 1.0)) < 1e-15);
  }
  SUBCASE("eta must be positive") {
    CHECK_THROWS_AS(scatter(PiecewisePotential::free(0.0, 1.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scatter(PiecewisePotential::free(0.0, 1.0), -1.0), std::invalid_argument);
  }
}

TEST_CASE("barrier-well scattering against 50-digit references") {
  CHECK(scatter(build_barrier_well(Strength(2.0)), 1.0).T ==
        Approx(0.045523950306181098).epsilon(1e-13));
  CHECK(scatter(build_barrier_well(Strength(3.0)), 0.5).T ==
        Approx(9.7880880037593466e-4).epsilon(1e-12));
  const auto r = scatter(build_barrier_well(Strength(10.0)), 15.0);
  CHECK(r.T == Approx(0.86349533935606940).epsilon(1e-12));
  CHECK(r.T == Approx(transmission_closed_form(15.0, 10.0)).epsilon(1e-10));
  CHECK(r.T_right == Approx(r.T).epsilon(1e-14));
  CHECK(scatter(build_barrier_well(Strength(kSigma1)), 1e-4).T ==
        Approx(3.1032148672423131e-3).epsilon(1e-9));
}

TEST_CASE("scattering wavefunction") {
  CHECK(std::abs(scattering_wavefunction(PiecewisePotential::free(-1.0, 2.0), 1.0, 0.0) - 1.0) <
        1e-15);
  // Outside on the right it is the transmitted wave.
  const auto v = build_barrier_well(Strength(2.5));
  const auto r = scatter(v, 0.7);
  const std::complex<double> i{0.0, 1.0};
  CHECK(std::abs(scattering_wavefunction(v, 0.7, 3.0) - r.t_left * std::exp(i * 2.1)) < 1e-13);
  CHECK(std::abs(scattering_wavefunction(v, 0.7, -2.0) -
                 (std::exp(-i * 1.4) + r.r_left * std::exp(i * 1.4))) < 1e-13);
}

TEST_CASE("jump ratio at the first resonance") {
  // The limit (1 - tanh^2)/(1 + tanh^2) = 7.7700980e-4 is reached only as
  // eta^2 -> 0; at eta = 1e-3 the exact ratio is still 10.7% above it.
  CHECK(jump_ratio_at(1e-3) == Approx(8.6016205927387402e-4).epsilon(1e-8));
  CHECK(jump_ratio_at(1e-4) == Approx(7.7784132293263004e-4).epsilon(1e-8));
  CHECK(jump_ratio_at(1e-5) == Approx(7.7701811568437273e-4).epsilon(1e-8));
  const double limit = jump_ratio_sq(kSigma1);
  CHECK(std::fabs(jump_ratio_at(1e-5) / limit - 1.0) < 1e-3);
  CHECK(jump_ratio_at(1e-5) < 1.0);
}

TEST_CASE("reflecting wall off resonance") {
  const auto v = build_barrier_well(Strength(2.0));
  const double eta = 1e-3;
  CHECK(std::abs(scattering_wavefunction(v, eta, -1.0)) < 1e-2);
  CHECK(std::abs(scattering_wavefunction(v, eta, 1.0)) < 1e-2);
  CHECK(std::abs(scattering_wavefunction(v, eta / 10, -1.0)) <
        std::abs(scattering_wavefunction(v, eta, -1.0)));
}

TEST_CASE("bound-state mismatch") {
  SUBCASE("free line has none") {
    const auto free = PiecewisePotential::free(-1.0, 2.0);
    for (double z : {1e-3, 0.5, 3.0}) {
      CHECK(bound_state_mismatch(free, BindingParameter(z)) > 0.0);
    }
    CHECK(find_bound_states_numeric(free, 10.0).empty());
  }
  SUBCASE("attractive delta") {
    const PiecewisePotential v(0.0, {}, {{0.0, -2.0 * 1.7}});
    CHECK(bound_state_mismatch(v, BindingParameter(1.7)) == Approx(0.0).scale(1.0));
    const auto roots = find_bound_states_numeric(v, 5.0);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].value() == Approx(1.7).epsilon(1e-13));
  }
  SUBCASE("zeta must be positive") {
    CHECK_THROWS_AS(BindingParameter(0.0), std::invalid_argument);
    CHECK_THROWS_AS(BindingParameter(-1.0), std::invalid_argument);
  }
}

TEST_CASE("numeric bound states of the junction") {
  const auto five = find_bound_states_numeric(build_barrier_well(Strength(15.0)), 15.0);
  REQUIRE(five.size() == 5);
  const double ref[] = {5.8182709962677804, 10.009821766709368, 12.41347535873134,
                        13.903417383787695, 14.732683589964016};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(five[i].value() == Approx(ref[i]).epsilon(1e-12));
  }

  const auto two = find_bound_states_numeric(build_barrier_well(Strength(kSigma1 + 0.05)), 4.0);
  REQUIRE(two.size() == 2);
  CHECK(two[0].value() == Approx(0.17853879457935663).epsilon(1e-11));
  CHECK(two[1].value() == Approx(3.3331079586497432).epsilon(1e-12));

  CHECK_THROWS_AS(find_bound_states_numeric(build_barrier_well(Strength(1.0)), -1.0),
                  std::invalid_argument);
}
