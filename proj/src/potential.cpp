#include <jspec/potential.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jspec {

Strength::Strength(double sigma) : sigma_(sigma) {
  if (!std::isfinite(sigma) || sigma < 0.0) {
    throw std::invalid_argument("strength sigma must be finite and >= 0, got " +
                                std::to_string(sigma));
  }
}

PiecewisePotential::PiecewisePotential(double x_left, std::vector<Slab> slabs,
                                       std::vector<DeltaScatterer> deltas)
    : x_left_(x_left), x_right_(x_left), slabs_(std::move(slabs)), deltas_(std::move(deltas)) {
  if (!std::isfinite(x_left)) {
    throw std::invalid_argument("potential: x_left must be finite");
  }
  for (std::size_t i = 0; i < slabs_.size(); ++i) {
    const Slab& s = slabs_[i];
    if (!std::isfinite(s.width) || s.width <= 0.0) {
      throw std::invalid_argument("potential: slab " + std::to_string(i) +
                                  " has non-positive or non-finite width");
    }
    if (!std::isfinite(s.height)) {
      throw std::invalid_argument("potential: slab " + std::to_string(i) +
                                  " has non-finite height");
    }
    x_right_ += s.width;
  }
  for (const DeltaScatterer& d : deltas_) {
    if (!std::isfinite(d.strength) || !std::isfinite(d.position)) {
      throw std::invalid_argument("potential: delta scatterer must be finite");
    }
    if (d.position < x_left_ || d.position > x_right_) {
      throw std::invalid_argument("potential: delta at x = " + std::to_string(d.position) +
                                  " lies outside the support");
    }
  }
  std::stable_sort(deltas_.begin(), deltas_.end(),
                   [](const DeltaScatterer& a, const DeltaScatterer& b) {
                     return a.position < b.position;
                   });
}

PiecewisePotential PiecewisePotential::free(double x_left, double width) {
  return PiecewisePotential(x_left, {Slab{width, 0.0}});
}

double PiecewisePotential::slab_edge(std::size_t i) const {
  if (i > slabs_.size()) {
    throw std::out_of_range("potential: slab index out of range");
  }
  if (i == slabs_.size()) {
    return x_right_;
  }
  double x = x_left_;
  for (std::size_t j = 0; j < i; ++j) {
    x += slabs_[j].width;
  }
  return x;
}

double PiecewisePotential::height_at(double x) const noexcept {
  if (x < x_left_ || x >= x_right_) {
    return 0.0;
  }
  double edge = x_left_;
  for (const Slab& s : slabs_) {
    edge += s.width;
    if (x < edge) {
      return s.height;
    }
  }
  return 0.0;
}

double PiecewisePotential::integral() const noexcept {
  double sum = 0.0;
  for (const Slab& s : slabs_) {
    sum += s.width * s.height;
  }
  return sum + total_delta_strength();
}

double PiecewisePotential::total_delta_strength() const noexcept {
  double sum = 0.0;
  for (const DeltaScatterer& d : deltas_) {
    sum += d.strength;
  }
  return sum;
}

PiecewisePotential PiecewisePotential::mirrored() const {
  std::vector<Slab> slabs(slabs_.rbegin(), slabs_.rend());
  std::vector<DeltaScatterer> deltas;
  deltas.reserve(deltas_.size());
  for (auto it = deltas_.rbegin(); it != deltas_.rend(); ++it) {
    deltas.push_back({-it->position, it->strength});
  }
  return PiecewisePotential(-x_right_, std::move(slabs), std::move(deltas));
}

PiecewisePotential PiecewisePotential::negated() const {
  std::vector<Slab> slabs = slabs_;
  for (Slab& s : slabs) {
    s.height = -s.height;
  }
  std::vector<DeltaScatterer> deltas = deltas_;
  for (DeltaScatterer& d : deltas) {
    d.strength = -d.strength;
  }
  return PiecewisePotential(x_left_, std::move(slabs), std::move(deltas));
}

PiecewisePotential build_barrier_well(Strength sigma) {
  const double h = sigma.squared();
  return PiecewisePotential(-1.0, {Slab{1.0, h}, Slab{1.0, -h}});
}

PiecewisePotential build_double_delta(Strength sigma) {
  std::vector<DeltaScatterer> deltas;
  if (sigma.value() > 0.0) {
    const double g = 0.5 * sigma.squared();
    deltas = {{-1.0, g}, {1.0, -g}};
  }
  return PiecewisePotential(-1.0, {Slab{2.0, 0.0}}, std::move(deltas));
}

}  // namespace jspec
