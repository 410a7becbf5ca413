#include <doctest.h>

#include <jspec/junction.hpp>
#include <jspec/potential.hpp>
#include <jspec/transfer.hpp>
#include <jspec/verify.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace jspec;

namespace {

PiecewisePotential random_stack(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_slabs(1, 10), n_deltas(0, 3);
  std::uniform_real_distribution<double> width(0.02, 0.2), height(-100.0, 100.0),
      strength(-10.0, 10.0), unit(0.0, 1.0), start(-2.0, 2.0);
  std::vector<Slab> slabs(static_cast<std::size_t>(n_slabs(rng)));
  double total = 0.0;
  for (Slab& s : slabs) {
    s = {width(rng), height(rng)};
    total += s.width;
  }
  const double x0 = start(rng);
  std::vector<DeltaScatterer> deltas(static_cast<std::size_t>(n_deltas(rng)));
  for (DeltaScatterer& d : deltas) {
    d = {x0 + total * unit(rng), strength(rng)};
  }
  return PiecewisePotential(x0, std::move(slabs), std::move(deltas));
}

double max_entry(const TransferMatrix& m) {
  return std::max({1.0, std::fabs(m.m11), std::fabs(m.m12), std::fabs(m.m21), std::fabs(m.m22)});
}

}  // namespace

TEST_CASE("randomized transfer-matrix invariants") {
  std::mt19937_64 rng(20010917);
  std::uniform_real_distribution<double> energy(-100.0, 100.0), eta(0.05, 10.0), unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const PiecewisePotential v = random_stack(rng);
    const double e = energy(rng);
    CAPTURE(i);
    CAPTURE(e);

    const TransferMatrix m = total_matrix(v, e);
    CHECK(std::fabs(m.determinant() - 1.0) <= 1e-12 * m.determinant_scale());

    const double k = eta(rng);
    const ScatteringResult r = scatter(v, k);
    CHECK(std::fabs(r.T + r.R - 1.0) <= 1e-12);
    CHECK(std::fabs(r.T_right + r.R_right - 1.0) <= 1e-12);
    CHECK(std::fabs(r.T - r.T_right) <= 1e-14);
    CHECK(std::fabs(r.T - scatter(v.mirrored(), k).T) <= 1e-14);

    // Split one slab in two at a random fraction.
    std::vector<Slab> split;
    const auto pick = static_cast<std::size_t>(unit(rng) * static_cast<double>(v.slabs().size()));
    const double f = 0.05 + 0.9 * unit(rng);
    for (std::size_t j = 0; j < v.slabs().size(); ++j) {
      const Slab& s = v.slabs()[j];
      if (j == std::min(pick, v.slabs().size() - 1)) {
        split.push_back({s.width * f, s.height});
        split.push_back({s.width * (1.0 - f), s.height});
      } else {
        split.push_back(s);
      }
    }
    const TransferMatrix ms = total_matrix(PiecewisePotential(v.x_left(), split, v.deltas()), e);
    const double scale = 1e-12 * max_entry(m);
    CHECK(std::fabs(ms.m11 - m.m11) <= scale);
    CHECK(std::fabs(ms.m12 - m.m12) <= scale);
    CHECK(std::fabs(ms.m21 - m.m21) <= scale);
    CHECK(std::fabs(ms.m22 - m.m22) <= scale);
  }
}

TEST_CASE("closed form equals the oracle at random points") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> eta(1e-3, 20.0), sigma(0.0, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const double e = eta(rng);
    const double s = sigma(rng);
    CAPTURE(e);
    CAPTURE(s);
    CHECK(std::fabs(transmission_closed_form(e, s) - scatter(build_barrier_well(Strength(s)), e).T) <
          1e-10);
  }
}

TEST_CASE("transmission is even under V -> -V for the junction") {
  // Negating the junction is the mirror image, so T is unchanged.
  for (double s : {0.5, 3.0, 9.0}) {
    const auto v = build_barrier_well(Strength(s));
    CHECK(scatter(v.negated(), 1.3).T == doctest::Approx(scatter(v, 1.3).T).epsilon(1e-13));
  }
}

TEST_CASE("quick property check from the verify suite") {
  const CheckResult r = check_properties(VerifyLevel::quick, kDefaultSeed);
  INFO(r.detail);
  CHECK(r.passed);
}
