#pragma once

// Bracketing root finders shared by the resonance, bound-state and oracle
// solvers. Everything here is sign-based; callers supply pole-free functions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jspec {

/// A sign-change scan found cells where the function dips towards zero
/// without a sign change at the grid nodes but does change sign on a finer
/// grid, i.e. the grid was too coarse to separate neighbouring roots.
class ScanResolutionError : public std::runtime_error {
 public:
  ScanResolutionError(const std::string& what, std::vector<double> cells)
      : std::runtime_error(what), cells_(std::move(cells)) {}

  /// Left edges of the offending grid cells.
  const std::vector<double>& cells() const noexcept { return cells_; }

 private:
  std::vector<double> cells_;
};

inline bool opposite_signs(double a, double b) noexcept {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

/// Bisection on [lo, hi] given f(lo), f(hi) of opposite sign (or one of them
/// zero). Runs until the bracket is narrower than x_tol or can no longer be
/// split in double precision.
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double f_hi, double x_tol = 0.0) {
  if (f_lo == 0.0) {
    return lo;
  }
  if (f_hi == 0.0) {
    return hi;
  }
  if (!opposite_signs(f_lo, f_hi)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
  }
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || hi - lo <= x_tol) {
      break;
    }
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if (opposite_signs(f_lo, f_mid)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

struct ScanOptions {
  std::size_t cells = 2000;      // uniform grid cells over [lo, hi]
  std::size_t refine_samples = 64;  // sub-samples used to inspect a dip
  double x_tol = 0.0;            // bisection interval tolerance; 0 = machine limit
};

struct ScanResult {
  std::vector<double> roots;          // ascending
  std::vector<double> hidden_pairs;   // left edges of cells hiding sign-change pairs
};

/// Uniform sign-change scan of f on [lo, hi] followed by bisection in every
/// cell with a sign change. Local minima of |f| without a sign change are
/// re-sampled; sign changes found there are reported in `hidden_pairs` (and
/// also bisected, so the roots list stays complete).
template <class F>
ScanResult scan_roots(F&& f, double lo, double hi, const ScanOptions& opt = {}) {
  if (!(hi > lo) || opt.cells < 1) {
    throw std::invalid_argument("scan_roots: empty interval");
  }
  const std::size_t n = opt.cells;
  std::vector<double> xs(n + 1);
  std::vector<double> fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = (i == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    fs[i] = f(xs[i]);
  }

  ScanResult out;
  auto refine_cell = [&](std::size_t i) {
    const std::size_t m = opt.refine_samples;
    double x_prev = xs[i];
    double f_prev = fs[i];
    bool found = false;
    for (std::size_t j = 1; j <= m; ++j) {
      const double x = (j == m) ? xs[i + 1]
                                : xs[i] + (xs[i + 1] - xs[i]) * static_cast<double>(j) /
                                              static_cast<double>(m);
      const double fx = (j == m) ? fs[i + 1] : f(x);
      if (opposite_signs(f_prev, fx) || (fx == 0.0 && j < m)) {
        out.roots.push_back(bisect(f, x_prev, x, f_prev, fx, opt.x_tol));
        found = true;
      }
      x_prev = x;
      f_prev = fx;
    }
    if (found) {
      out.hidden_pairs.push_back(xs[i]);
    }
  };

  std::vector<bool> refine(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i] == 0.0) {
      if (i > 0) {  // node roots are attributed to the cell on their right
        out.roots.push_back(xs[i]);
      }
      continue;
    }
    if (opposite_signs(fs[i], fs[i + 1])) {
      out.roots.push_back(bisect(f, xs[i], xs[i + 1], fs[i], fs[i + 1], opt.x_tol));
    }
  }
  // Local minima of |f| with no sign change on either side may hide a root pair.
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = std::fabs(fs[i]);
    const bool below_left = i == 0 || (a < std::fabs(fs[i - 1]) && !opposite_signs(fs[i - 1], fs[i]) &&
                                       fs[i - 1] != 0.0);
    const bool below_right = i == n || (a < std::fabs(fs[i + 1]) && !opposite_signs(fs[i], fs[i + 1]) &&
                                        fs[i + 1] != 0.0);
    if (fs[i] == 0.0 || !below_left || !below_right) {
      continue;
    }
    if (i > 0) {
      refine[i - 1] = true;
    }
    if (i < n) {
      refine[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (refine[i]) {
      refine_cell(i);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace jspec
