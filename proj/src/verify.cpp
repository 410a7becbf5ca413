#include <jspec/verify.hpp>

#include <jspec/junction.hpp>
#include <jspec/potential.hpp>
#include <jspec/roots.hpp>
#include <jspec/spectrum.hpp>
#include <jspec/transfer.hpp>
#include <jspec/waveguide.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace jspec {

namespace {

using Clock = std::chrono::steady_clock;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Runs body, timing it and turning escaped exceptions into a failed check.
CheckResult timed(std::string id, std::string description,
                  const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

double oracle_T(double eta, double sigma) {
  return scatter(build_barrier_well(Strength(sigma)), eta).T;
}

}  // namespace

CheckResult check_oracle_transmission(VerifyLevel level) {
  const int n = level == VerifyLevel::full ? 200 : 50;
  return timed("oracle-transmission",
               "closed-form T(eta, sigma) equals the transfer-matrix T on the (eta, sigma) grid",
               [n, level](CheckResult& r) {
                 double worst = 0.0;
                 double worst_eta = 0.0;
                 double worst_sigma = 0.0;
                 std::size_t nodes = 0;
                 auto probe = [&](double eta, double sigma) {
                   const double d = std::fabs(transmission_closed_form(eta, sigma) - oracle_T(eta, sigma));
                   ++nodes;
                   if (!(d <= worst)) {
                     worst = d;
                     worst_eta = eta;
                     worst_sigma = sigma;
                   }
                 };
                 const auto start = Clock::now();
                 for (int i = 1; i <= n; ++i) {
                   const double eta = 20.0 * i / n;
                   for (int j = 0; j < n; ++j) {
                     probe(eta, 20.0 * j / (n - 1));
                   }
                   probe(eta, eta);  // diagonal eta = sigma
                 }
                 const double secs = std::chrono::duration<double>(Clock::now() - start).count();
                 r.passed = worst <= 1e-10 && (level == VerifyLevel::quick || secs < 10.0);
                 r.detail = std::to_string(nodes) + " nodes, max |T_closed - T_oracle| = " + sci(worst) +
                            " at (eta, sigma) = (" + sci(worst_eta) + ", " + sci(worst_sigma) +
                            "), tol 1e-10, " + sci(secs) + " s (limit 10 s)";
               });
}

CheckResult check_resonance_levels(VerifyLevel level) {
  const double step = level == VerifyLevel::full ? 1e-4 : 1e-3;
  return timed("resonance-levels",
               "tan(sigma_n) = tanh(sigma_n) roots: residuals, scan oracle, asymptote",
               [step](CheckResult& r) {
                 const auto levels = resonance_levels(10);
                 double worst_residual = 0.0;
                 for (const auto& l : levels) {
                   worst_residual = std::max(worst_residual, std::fabs(l.residual));
                 }
                 // Independent oracle: zero-energy m21 of the junction vanishes
                 // exactly at the transparency levels.
                 const auto m21 = [](double sigma) {
                   return total_matrix(build_barrier_well(Strength(sigma)), 0.0).m21;
                 };
                 ScanOptions opt;
                 opt.cells = static_cast<std::size_t>(std::lround((7.6 - 0.5) / step));
                 const ScanResult scan = scan_roots(m21, 0.5, 7.6, opt);
                 // Agreement to 7 significant digits: half a unit in the 7th digit.
                 const auto digits7 = [](double x, double ref) {
                   return std::fabs(x - ref) <= 0.5 * std::pow(10.0, std::floor(std::log10(ref)) - 6);
                 };
                 bool oracle_ok = scan.roots.size() >= 2;
                 double d1 = INFINITY;
                 double d2 = INFINITY;
                 if (oracle_ok) {
                   d1 = std::fabs(levels[0].sigma_n - scan.roots[0]);
                   d2 = std::fabs(levels[1].sigma_n - scan.roots[1]);
                   oracle_ok = digits7(levels[0].sigma_n, scan.roots[0]) &&
                               digits7(levels[1].sigma_n, scan.roots[1]);
                 }
                 const double lit1 = std::fabs(levels[0].sigma_n - 3.9266023);
                 const double lit2 = std::fabs(levels[1].sigma_n - 7.0685828);
                 const double asym = std::fabs(levels[9].sigma_n - 41.0 * std::numbers::pi / 4.0);
                 r.passed = worst_residual < 1e-12 && oracle_ok &&
                            digits7(levels[0].sigma_n, 3.9266023) &&
                            digits7(levels[1].sigma_n, 7.0685828) && asym < 1e-12;
                 r.detail = "max residual " + sci(worst_residual) + " (tol 1e-12); |sigma_n - oracle| = " +
                            sci(d1) + ", " + sci(d2) + "; |sigma_1 - 3.9266023| = " +
                            sci(lit1) + ", |sigma_2 - 7.0685828| = " + sci(lit2) +
                            " (7 significant digits: tol 5e-7)"
                            "; |sigma_10 - 41 pi/4| = " + sci(asym) + " (tol 1e-12)";
               });
}

CheckResult check_transparency_limit(VerifyLevel /*level*/) {
  return timed("transparency-limit",
               "T(eta, sigma_n) -> 1 - tanh^4(sigma_n) with O(eta^2) error, n = 1..5",
               [](CheckResult& r) {
                 bool ok = true;
                 std::ostringstream os;
                 for (int n = 1; n <= 5; ++n) {
                   const double s = resonance_level(n);
                   const double tn = resonance_transmission(s);
                   double err[3];
                   double oracle_err = 0.0;
                   const double etas[3] = {1e-2, 1e-3, 1e-4};
                   for (int i = 0; i < 3; ++i) {
                     err[i] = std::fabs(transmission_closed_form(etas[i], s) - tn);
                   }
                   oracle_err = std::fabs(oracle_T(1e-4, s) - tn);
                   const double r1 = err[0] / err[1];
                   const double r2 = err[1] / err[2];
                   const bool this_ok = r1 > 50.0 && r1 < 200.0 && r2 > 50.0 && r2 < 200.0 &&
                                        err[2] < 1e-6 && oracle_err < 1e-6;
                   ok = ok && this_ok;
                   os << "n=" << n << ": err " << sci(err[0]) << "/" << sci(err[1]) << "/" << sci(err[2])
                      << " decade ratios " << sci(r1) << ", " << sci(r2) << "; ";
                 }
                 r.passed = ok;
                 r.detail = os.str() + "ratio window (50, 200), final err tol 1e-6";
               });
}

CheckResult check_reflecting_wall(VerifyLevel /*level*/) {
  return timed("reflecting-wall",
               "off resonance T -> 0; double-delta regularization reflects totally with a node",
               [](CheckResult& r) {
                 bool ok = true;
                 std::ostringstream os;
                 for (double s : {2.0, 5.0, 9.0}) {
                   const double tc = transmission_closed_form(1e-4, s);
                   const double to = oracle_T(1e-4, s);
                   ok = ok && tc < 1e-4 && to < 1e-4;
                   os << "T(1e-4, " << s << ") = " << sci(tc) << "; ";
                 }
                 const PiecewisePotential dd = build_double_delta(Strength(3.0));
                 const double t_dd = scatter(dd, 1e-3).T;
                 const double node = std::abs(scattering_wavefunction(dd, 1e-3, 0.0));
                 const double t_bw = oracle_T(1e-3, resonance_level(1));
                 ok = ok && t_dd < 1e-4 && node < 1e-2;
                 r.passed = ok;
                 os << "double-delta T(1e-3, 3) = " << sci(t_dd) << " (tol 1e-4), |psi(0)| = " << sci(node)
                    << " (tol 1e-2); barrier-well T(1e-3, sigma_1) = " << sci(t_bw);
                 r.detail = os.str();
               });
}

namespace {

double oracle_jump_ratio(double eta, double sigma) {
  const PiecewisePotential bw = build_barrier_well(Strength(sigma));
  return std::norm(scattering_wavefunction(bw, eta, -1.0) / scattering_wavefunction(bw, eta, 1.0));
}

}  // namespace

CheckResult check_jump_ratio(double eta) {
  return timed("jump-ratio",
               "oracle |psi(-1)/psi(+1)|^2 at sigma_1 equals (1 - tanh^2)/(1 + tanh^2)",
               [eta](CheckResult& r) {
                 const double s1 = resonance_level(1);
                 const double expected = jump_ratio_sq(s1);
                 const double measured = oracle_jump_ratio(eta, s1);
                 const double rel = std::fabs(measured / expected - 1.0);
                 r.passed = rel < 1e-3 && measured < 1.0;
                 r.detail = "eta = " + sci(eta) + ": oracle " + sci(measured) + ", closed form " +
                            sci(expected) + ", rel diff " + sci(rel) + " (tol 1e-3)";
               });
}

CheckResult check_jump_ratio_convergence(VerifyLevel /*level*/) {
  return timed("jump-ratio-convergence",
               "oracle jump ratio approaches the closed form as O(eta^2), n = 1..2",
               [](CheckResult& r) {
                 bool ok = true;
                 std::ostringstream os;
                 // sigma_2 carries a ~1e8 larger O(eta^2) coefficient, so it
                 // is probed one decade further down.
                 const double start[2] = {1e-3, 1e-6};
                 for (int n = 1; n <= 2; ++n) {
                   const double s = resonance_level(n);
                   const double expected = jump_ratio_sq(s);
                   double err[3];
                   for (int i = 0; i < 3; ++i) {
                     const double eta = start[n - 1] * std::pow(10.0, -i);
                     err[i] = std::fabs(oracle_jump_ratio(eta, s) / expected - 1.0);
                   }
                   const double r1 = err[0] / err[1];
                   const double r2 = err[1] / err[2];
                   ok = ok && r1 > 50.0 && r1 < 200.0 && r2 > 50.0 && r2 < 200.0 && err[2] < 1e-3;
                   os << "n=" << n << " from eta " << sci(start[n - 1]) << ": rel err " << sci(err[0])
                      << "/" << sci(err[1]) << "/" << sci(err[2]) << "; ";
                 }
                 r.passed = ok;
                 r.detail = os.str() + "decade ratio window (50, 200), final tol 1e-3";
               });
}

CheckResult check_bound_state_count(VerifyLevel level) {
  const double step = level == VerifyLevel::full ? 0.01 : 0.05;
  return timed("bound-state-count",
               "five bound states at sigma = 15, branches emerging at sigma_0..sigma_4",
               [step](CheckResult& r) {
                 const int count = count_bound_states(15.0);
                 const std::size_t found = bound_states(15.0).size();
                 const auto curves = spectrum_curves(15.0, step);
                 const double tol = 2.0 * step;
                 bool thresholds_ok = curves.size() == 5;
                 std::ostringstream os;
                 os << "count(15) = " << count << ", bound_states(15) has " << found << ", " << curves.size()
                    << " curves; emergence:";
                 for (std::size_t n = 0; n < curves.size(); ++n) {
                   const double expected = n == 0 ? 0.0 : resonance_level(static_cast<int>(n));
                   const double first = curves[n].samples.front().sigma;
                   thresholds_ok = thresholds_ok && std::fabs(first - expected) <= tol;
                   os << " " << first << " (sigma_" << n << " = " << expected << ")";
                 }
                 os << "; tol " << tol << " at step " << step;
                 r.passed = count == 5 && found == 5 && thresholds_ok;
                 r.detail = os.str();
               });
}

CheckResult check_bound_state_oracle(VerifyLevel /*level*/) {
  return timed("bound-state-oracle",
               "closed-form bound-state roots equal the transfer-matrix roots pairwise",
               [](CheckResult& r) {
                 bool ok = true;
                 double worst = 0.0;
                 std::ostringstream os;
                 for (double s : {1.0, 5.0, 10.0, 15.0}) {
                   const auto closed = bound_states(s);
                   const auto oracle = find_bound_states_numeric(build_barrier_well(Strength(s)), s);
                   ok = ok && closed.size() == oracle.size();
                   os << "sigma " << s << ": " << closed.size() << " vs " << oracle.size() << "; ";
                   for (std::size_t i = 0; i < std::min(closed.size(), oracle.size()); ++i) {
                     worst = std::max(worst, std::fabs(closed[i].zeta - oracle[i].value()));
                   }
                 }
                 r.passed = ok && worst <= 1e-9;
                 r.detail = os.str() + "max |zeta_closed - zeta_oracle| = " + sci(worst) + " (tol 1e-9)";
               });
}

CheckResult check_threshold_consistency(VerifyLevel /*level*/) {
  return timed("threshold-consistency",
               "smallest bound-state root near sigma_n matches the small-zeta threshold equation",
               [](CheckResult& r) {
                 bool ok = true;
                 std::ostringstream os;
                 for (int n = 1; n <= 2; ++n) {
                   const double s = resonance_level(n) + 0.02;
                   const auto states = bound_states(s);
                   const double full_root = states.empty() ? NAN : states.front().zeta;
                   const auto g = [s](double z) { return threshold_residual(s, z); };
                   ScanOptions opt;
                   opt.cells = 5000;
                   const ScanResult scan = scan_roots(g, 0.0, 0.5, opt);
                   const double approx_root = scan.roots.empty() ? NAN : scan.roots.front();
                   const double rel = std::fabs(full_root - approx_root) / full_root;
                   ok = ok && rel < 0.05;
                   os << "sigma_" << n << " + 0.02: zeta " << full_root << " vs threshold root "
                      << approx_root << " (rel " << sci(rel) << "); ";
                 }
                 r.passed = ok;
                 r.detail = os.str() + "tol 5%";
               });
}

CheckResult check_waveguide(VerifyLevel level) {
  const int grid = level == VerifyLevel::full ? 100 : 30;
  return timed("waveguide",
               "cutoffs on q = k sqrt(eps_b), continuity at cutoff, sector classification",
               [grid](CheckResult& r) {
                 bool ok = true;
                 std::ostringstream os;
                 double worst_line = 0.0;
                 double worst_jump = 0.0;
                 std::size_t mismatches = 0;
                 std::size_t boundary_hits = 0;
                 for (const WaveguideConfig& cfg :
                      {WaveguideConfig(1.0, 2.25, 1.0), WaveguideConfig(1.0, 2.0, 1.5)}) {
                   const double root_b = std::sqrt(cfg.eps_b());
                   for (const CutoffPoint& c : cutoff_points(cfg, 10)) {
                     worst_line = std::max(worst_line, std::fabs(c.q - c.k * root_b) / c.q);
                   }
                   for (const CutoffPoint& c : cutoff_points(cfg, 3)) {
                     const DispersionCurve curve = dispersion_curve(cfg, c.n, {c.k * (1.0 + 1e-9)});
                     const double jump = curve.empty() ? INFINITY : std::fabs(curve.modes[0].q - c.q);
                     worst_jump = std::max(worst_jump, jump);
                   }
                   const double line2_sq = cfg.eps_b() - cfg.eps_m();
                   for (int i = 1; i <= grid; ++i) {
                     const double k = 10.0 * i / grid;
                     for (int j = 0; j < grid; ++j) {
                       const double q = static_cast<double>(j) / grid * k * root_b;
                       const TransverseTransmission tt = transverse_transmission(cfg, {k, q});
                       // Geometric classification against line 2, q^2 = k^2 (eps_b - eps_m).
                       const double gap = q * q - k * k * line2_sq;
                       Sector geometric = gap > 0.0 ? Sector::I : Sector::II;
                       if (std::fabs(gap) <= 1e-12 * k * k * (cfg.eps_b() + cfg.eps_m())) {
                         geometric = Sector::boundary;
                       }
                       const double beta_sq = tt.sigma * tt.sigma - tt.eta * tt.eta;
                       const bool beta_consistent =
                           tt.sector == Sector::boundary || (tt.sector == Sector::I) == (beta_sq > 0.0);
                       if (geometric != tt.sector || !beta_consistent || !(tt.T >= 0.0 && tt.T <= 1.0)) {
                         ++mismatches;
                       }
                       if (tt.sector == Sector::boundary) {
                         ++boundary_hits;
                       }
                     }
                   }
                 }
                 ok = worst_line <= 1e-12 && worst_jump <= 1e-6 && mismatches == 0 && boundary_hits > 0;
                 r.passed = ok;
                 os << "cutoff line rel err " << sci(worst_line) << " (tol 1e-12); cutoff jump in q "
                    << sci(worst_jump) << " (tol 1e-6); " << grid << "x" << grid
                    << " sector grid x2 configs: " << mismatches << " mismatches, " << boundary_hits
                    << " boundary nodes";
                 r.detail = os.str();
               });
}

namespace {

PiecewisePotential random_stack(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> slab_count(1, 10);
  std::uniform_int_distribution<int> delta_count(0, 3);
  std::uniform_real_distribution<double> width(0.02, 0.2);
  std::uniform_real_distribution<double> height(-100.0, 100.0);
  std::uniform_real_distribution<double> origin(-1.0, 1.0);
  std::uniform_real_distribution<double> strength(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double x_left = origin(rng);
  std::vector<Slab> slabs(static_cast<std::size_t>(slab_count(rng)));
  double total = 0.0;
  for (Slab& s : slabs) {
    s = {width(rng), height(rng)};
    total += s.width;
  }
  std::vector<DeltaScatterer> deltas(static_cast<std::size_t>(delta_count(rng)));
  for (DeltaScatterer& d : deltas) {
    d = {x_left + unit(rng) * total * (1.0 - 1e-12), strength(rng)};
  }
  return PiecewisePotential(x_left, std::move(slabs), std::move(deltas));
}

double max_abs_entry(const TransferMatrix& m) {
  return std::max({std::fabs(m.m11), std::fabs(m.m12), std::fabs(m.m21), std::fabs(m.m22)});
}

}  // namespace

CheckResult check_properties(VerifyLevel level, std::uint64_t seed) {
  const int cases = level == VerifyLevel::full ? 1000 : 200;
  return timed("properties",
               "randomized stacks: det = 1, T + R = 1, left/right T equality, slab splitting",
               [cases, seed](CheckResult& r) {
                 std::mt19937_64 rng(seed);
                 std::uniform_real_distribution<double> energy(-100.0, 100.0);
                 std::uniform_real_distribution<double> eta_dist(0.05, 10.0);
                 std::uniform_real_distribution<double> fraction(0.1, 0.9);
                 int det_fail = 0, flux_fail = 0, side_fail = 0, split_fail = 0;
                 double worst_det = 0.0, worst_flux = 0.0, worst_side = 0.0, worst_split = 0.0;
                 for (int c = 0; c < cases; ++c) {
                   const PiecewisePotential p = random_stack(rng);

                   const TransferMatrix m = total_matrix(p, energy(rng));
                   const double det_err = std::fabs(m.determinant() - 1.0) / m.determinant_scale();
                   worst_det = std::max(worst_det, det_err);
                   det_fail += det_err > 1e-12;

                   const double eta = eta_dist(rng);
                   const ScatteringResult s = scatter(p, eta);
                   const double flux_err = std::fabs(s.T + s.R - 1.0);
                   worst_flux = std::max(worst_flux, flux_err);
                   flux_fail += flux_err > 1e-12;

                   const double mirrored_T = scatter(p.mirrored(), eta).T;
                   const double side_err =
                       std::max(std::fabs(s.T - s.T_right), std::fabs(s.T - mirrored_T));
                   worst_side = std::max(worst_side, side_err);
                   side_fail += side_err > 1e-14;

                   std::vector<Slab> slabs = p.slabs();
                   std::uniform_int_distribution<std::size_t> pick(0, slabs.size() - 1);
                   const std::size_t i = pick(rng);
                   const double f = fraction(rng);
                   const Slab whole = slabs[i];
                   slabs[i] = {whole.width * f, whole.height};
                   slabs.insert(slabs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                Slab{whole.width * (1.0 - f), whole.height});
                   const PiecewisePotential split(p.x_left(), std::move(slabs), p.deltas());
                   const double e = energy(rng);
                   const TransferMatrix a = total_matrix(p, e);
                   const TransferMatrix b = total_matrix(split, e);
                   const double split_err =
                       max_abs_entry({a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22}) /
                       std::max(1.0, max_abs_entry(a));
                   worst_split = std::max(worst_split, split_err);
                   split_fail += split_err > 1e-12;
                 }
                 r.passed = det_fail == 0 && flux_fail == 0 && side_fail == 0 && split_fail == 0;
                 std::ostringstream os;
                 os << cases << " cases each, seed " << seed << ": det " << det_fail << " fail (max "
                    << sci(worst_det) << ", tol 1e-12 x scale); T+R " << flux_fail << " fail (max "
                    << sci(worst_flux) << ", tol 1e-12); left/right " << side_fail << " fail (max "
                    << sci(worst_side) << ", tol 1e-14); split " << split_fail << " fail (max "
                    << sci(worst_split) << ", tol 1e-12 x scale)";
                 r.detail = os.str();
               });
}

std::vector<CheckResult> run_checks(VerifyLevel level, std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_oracle_transmission(level));
  out.push_back(check_resonance_levels(level));
  out.push_back(check_transparency_limit(level));
  out.push_back(check_reflecting_wall(level));
  // At eta = 1e-3 the O(eta^2) correction to the jump ratio is still ~10%;
  // 1e-5 is inside the limiting regime.
  out.push_back(check_jump_ratio(1e-5));
  out.push_back(check_jump_ratio_convergence(level));
  out.push_back(check_bound_state_count(level));
  out.push_back(check_bound_state_oracle(level));
  out.push_back(check_threshold_consistency(level));
  out.push_back(check_waveguide(level));
  out.push_back(check_properties(level, seed));
  return out;
}

}  // namespace jspec
