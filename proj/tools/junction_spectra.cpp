// junction-spectra: tables and figure data for the barrier-well junction.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 tolerance breach.

#include <jspec/junction.hpp>
#include <jspec/potential.hpp>
#include <jspec/spectrum.hpp>
#include <jspec/table.hpp>
#include <jspec/transfer.hpp>
#include <jspec/verify.hpp>
#include <jspec/waveguide.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace jspec;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string out_path;
  bool json = false;
  int precision = 17;
  std::uint64_t seed = kDefaultSeed;
};

// Owns the output stream selected by --out.
class Output {
 public:
  explicit Output(const GlobalOptions& g) : opts_(g) {
    if (!g.out_path.empty() && g.out_path != "-") {
      file_ = std::make_unique<std::ofstream>(g.out_path);
      if (!*file_) {
        throw UsageError("cannot open output file " + g.out_path);
      }
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  TableWriter table(std::vector<std::string> columns) {
    return TableWriter(stream(), std::move(columns),
                       opts_.json ? OutputFormat::json_lines : OutputFormat::csv, opts_.precision);
  }

 private:
  const GlobalOptions& opts_;
  std::unique_ptr<std::ofstream> file_;
};

void warn(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

// ---------------------------------------------------------------- transmission

struct TransmissionOptions {
  std::string eta = "1";
  std::string sigma = "0";
  std::string model = "closed";
  std::string preset;
  bool diagonal = false;
  double tol = 1e-8;
};

int run_transmission(const GlobalOptions& g, const TransmissionOptions& o) {
  std::string eta_text = o.eta;
  std::string sigma_text = o.sigma;
  bool log_column = false;
  if (o.preset == "fig2") {
    // eta in (0, 20] and sigma in [0, 20], 200 x 200.
    eta_text = "0.1:20:200";
    sigma_text = "0:20:200";
  } else if (o.preset == "fig3") {
    // Three low-energy sections over sigma in (0, 12], with log10 T.
    eta_text = "0.0005,0.05,0.5";
    sigma_text = "0.01:12:1200";
    log_column = true;
  } else if (!o.preset.empty()) {
    throw UsageError("transmission: unknown preset '" + o.preset + "' (fig2 | fig3)");
  }
  const std::vector<double> etas = parse_axis("eta", eta_text);
  const std::vector<double> sigmas = parse_axis("sigma", sigma_text);
  for (double e : etas) {
    if (!(e > 0.0)) {
      throw UsageError("transmission: eta values must be > 0");
    }
  }
  for (double s : sigmas) {
    if (!(s >= 0.0) || s > kMaxSupportedSigma) {
      throw UsageError("transmission: sigma values must lie in [0, 25]");
    }
  }

  const bool closed = o.model == "closed" || o.model == "both";
  const bool oracle = o.model == "oracle" || o.model == "both";
  std::vector<std::string> columns{"eta", "sigma", "T"};
  if (o.model == "both") {
    columns.insert(columns.end(), {"T_oracle", "abs_diff"});
  }
  if (log_column) {
    columns.push_back("log10_T");
  }

  Output out(g);
  TableWriter table = out.table(columns);
  bool breach = false;
  auto emit = [&](double eta, double sigma) {
    std::vector<Cell> row{eta, sigma};
    double t = 0.0;
    if (closed) {
      t = transmission_closed_form(eta, sigma);
      row.emplace_back(t);
    }
    if (oracle) {
      const double t_oracle = scatter(build_barrier_well(Strength(sigma)), eta).T;
      if (closed) {
        const double diff = std::fabs(t - t_oracle);
        breach = breach || !(diff <= o.tol);
        row.emplace_back(t_oracle);
        row.emplace_back(diff);
      } else {
        t = t_oracle;
        row.emplace_back(t);
      }
    }
    if (log_column) {
      row.emplace_back(std::log10(t));
    }
    table.row(row);
  };
  for (double eta : etas) {
    if (o.diagonal) {
      emit(eta, eta);
      continue;
    }
    for (double sigma : sigmas) {
      emit(eta, sigma);
    }
  }
  if (breach) {
    std::cerr << "error: |T_closed - T_oracle| exceeded --tol " << o.tol << '\n';
    return kExitTolerance;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- resonances

int run_resonances(const GlobalOptions& g, int count) {
  if (count < 1) {
    throw UsageError("resonances: --count must be >= 1");
  }
  Output out(g);
  TableWriter table = out.table({"n", "sigma_n", "residual", "T_n", "jump_ratio_sq"});
  for (const ResonanceLevel& l : resonance_levels(count)) {
    table.row({std::int64_t{l.n}, l.sigma_n, l.residual, l.transmission, l.jump_ratio_sq});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bound states

struct BoundStateOptions {
  std::optional<double> sigma;
  std::string sweep;
  std::string preset;
  double tol = 1e-8;
};

int run_bound_states(const GlobalOptions& g, const BoundStateOptions& o) {
  std::string sweep = o.sweep;
  if (o.preset == "fig4") {
    sweep = "0.05:15:300";  // sigma = 0.05, 0.10, ..., 15
  } else if (!o.preset.empty()) {
    throw UsageError("bound-states: unknown preset '" + o.preset + "' (fig4)");
  }
  if (o.sigma.has_value() == !sweep.empty()) {
    throw UsageError("bound-states: give exactly one of --sigma, --sweep or --preset");
  }
  Output out(g);
  if (o.sigma) {
    const double sigma = *o.sigma;
    if (!(sigma >= 0.0) || sigma > kMaxSupportedSigma) {
      throw UsageError("bound-states: --sigma must lie in [0, 25]");
    }
    TableWriter table = out.table({"sigma", "n", "zeta", "residual", "oracle_zeta", "diff"});
    if (sigma == 0.0) {
      return kExitOk;
    }
    try {
      count_bound_states(sigma);
    } catch (const ThresholdProximityError& e) {
      warn(e.what());
    }
    std::vector<BoundState> states = bound_states(sigma);
    const auto oracle = find_bound_states_numeric(build_barrier_well(Strength(sigma)), sigma);
    if (oracle.size() != states.size()) {
      warn("closed form found " + std::to_string(states.size()) + " states, oracle found " +
           std::to_string(oracle.size()));
    }
    bool breach = false;
    // states are ascending in zeta; print n = 0 first.
    for (std::size_t k = states.size(); k-- > 0;) {
      const BoundState& s = states[k];
      const double oz = k < oracle.size() && oracle.size() == states.size() ? oracle[k].value() : NAN;
      const double diff = std::fabs(s.zeta - oz);
      breach = breach || !(diff <= o.tol);
      table.row({sigma, std::int64_t{s.n}, s.zeta, bound_state_residual(s.zeta, sigma), oz, diff});
    }
    if (breach) {
      std::cerr << "error: closed-form and oracle roots differ by more than --tol " << o.tol << '\n';
      return kExitTolerance;
    }
    return kExitOk;
  }

  const std::vector<double> sigmas = parse_axis("sigma", sweep);
  TableWriter table = out.table({"sigma", "n", "zeta"});
  for (double sigma : sigmas) {
    if (!(sigma >= 0.0) || sigma > kMaxSupportedSigma) {
      throw UsageError("bound-states: sweep values must lie in [0, 25]");
    }
    const std::vector<BoundState> states = bound_states(sigma);
    for (std::size_t k = states.size(); k-- > 0;) {
      table.row({sigma, std::int64_t{states[k].n}, states[k].zeta});
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- waveguide

struct WaveguideOptions {
  double a = 1.0;
  double eps_b = 2.25;
  double eps_m = 1.0;
  std::string preset;
  int count = 4;
  int modes = 4;
  std::string k_axis;
  int q_count = 100;
};

int run_cutoffs(const GlobalOptions& g, const WaveguideOptions& o, const WaveguideConfig& cfg) {
  if (o.count < 1) {
    throw UsageError("waveguide cutoffs: --count must be >= 1");
  }
  Output out(g);
  TableWriter table = out.table({"n", "k_n", "q_n0"});
  for (const CutoffPoint& c : cutoff_points(cfg, o.count)) {
    table.row({std::int64_t{c.n}, c.k, c.q});
  }
  return kExitOk;
}

int run_dispersion(const GlobalOptions& g, const WaveguideOptions& o, const WaveguideConfig& cfg) {
  if (o.modes < 1) {
    throw UsageError("waveguide dispersion: --modes must be >= 1");
  }
  const std::vector<double> ks = parse_axis("k", o.k_axis.empty() ? "0.05:12:240" : o.k_axis);
  const double k_limit = kMaxSupportedSigma / (cfg.a() * std::sqrt(cfg.eps_m()));
  for (double k : ks) {
    if (!(k > 0.0) || k > k_limit) {
      throw UsageError("waveguide dispersion: k samples must satisfy 0 < k a sqrt(eps_m) <= 25");
    }
  }
  Output out(g);
  TableWriter table = out.table({"n", "k", "q"});
  for (int n = 0; n < o.modes; ++n) {
    const DispersionCurve curve = dispersion_curve(cfg, n, ks);
    if (curve.empty()) {
      warn("mode " + std::to_string(n) + " has no samples above its cutoff in the requested k range");
      table.row({std::int64_t{n}, NAN, NAN});
      continue;
    }
    for (const ModePoint& p : curve.modes) {
      table.row({std::int64_t{n}, p.k, p.q});
    }
  }
  return kExitOk;
}

int run_sectors(const GlobalOptions& g, const WaveguideOptions& o, const WaveguideConfig& cfg) {
  if (o.q_count < 1) {
    throw UsageError("waveguide sectors: --q-count must be >= 1");
  }
  const std::vector<double> ks = parse_axis("k", o.k_axis.empty() ? "0.12:12:100" : o.k_axis);
  const double k_limit = kMaxSupportedSigma / (cfg.a() * std::sqrt(cfg.eps_m()));
  for (double k : ks) {
    if (!(k > 0.0) || k > k_limit) {
      throw UsageError("waveguide sectors: k samples must satisfy 0 < k a sqrt(eps_m) <= 25");
    }
  }
  Output out(g);
  TableWriter table = out.table({"k", "q", "sector", "T"});
  const double root_b = std::sqrt(cfg.eps_b());
  const double line2 = cfg.eps_b() > cfg.eps_m() ? std::sqrt(cfg.eps_b() - cfg.eps_m()) : NAN;
  auto emit = [&](double k, double q) {
    const TransverseTransmission tt = transverse_transmission(cfg, {k, q});
    table.row({k, q, to_string(tt.sector), tt.T});
  };
  for (double k : ks) {
    // q_j = (j / q_count) k sqrt(eps_b), j = 0..q_count-1: strictly below line 1.
    // The line-2 node q = k sqrt(eps_b - eps_m) is added in order unless the
    // grid already contains it.
    bool line2_pending = std::isfinite(line2);
    for (int j = 0; j < o.q_count; ++j) {
      const double q = static_cast<double>(j) / o.q_count * k * root_b;
      if (line2_pending && q >= k * line2) {
        if (transverse_transmission(cfg, {k, q}).sector != Sector::boundary) {
          emit(k, k * line2);
        }
        line2_pending = false;
      }
      emit(k, q);
    }
    if (line2_pending) {
      emit(k, k * line2);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const GlobalOptions& g, const std::string& level_name) {
  VerifyLevel level = VerifyLevel::quick;
  if (level_name == "full") {
    level = VerifyLevel::full;
  } else if (level_name != "quick") {
    throw UsageError("verify: --level must be quick or full");
  }
  Output out(g);
  std::ostream& os = out.stream();
  int failures = 0;
  for (const CheckResult& r : run_checks(level, g.seed)) {
    os << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << format_number(r.seconds, 3) << " s): "
       << r.detail << '\n';
    failures += !r.passed;
  }
  os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmission, resonances, bound states and waveguide maps of the barrier-well junction",
               "junction-spectra"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--out", global.out_path, "Output file (default stdout)");
  app.add_flag("--json", global.json, "Write JSON lines instead of CSV");
  app.add_option("--precision", global.precision, "Significant digits for numbers")
      ->check(CLI::Range(1, 17));
  app.add_option("--seed", global.seed, "Seed for randomized checks");

  TransmissionOptions tr;
  auto* cmd_tr = app.add_subcommand("transmission", "T(eta, sigma) over a grid");
  cmd_tr->add_option("--eta", tr.eta, "eta axis: value, list a,b,c or min:max:count[:lin|log]");
  cmd_tr->add_option("--sigma", tr.sigma, "sigma axis, same syntax as --eta");
  cmd_tr->add_option("--model", tr.model, "closed | oracle | both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  cmd_tr->add_option("--preset", tr.preset, "fig2 | fig3");
  cmd_tr->add_flag("--diagonal", tr.diagonal, "Evaluate only sigma = eta for each eta");
  cmd_tr->add_option("--tol", tr.tol, "Allowed |T_closed - T_oracle| in both mode");

  int resonance_count = 10;
  auto* cmd_res = app.add_subcommand("resonances", "Transparency resonance levels");
  cmd_res->add_option("--count", resonance_count, "Number of levels");

  BoundStateOptions bs;
  auto* cmd_bs = app.add_subcommand("bound-states", "Bound-state spectrum");
  cmd_bs->add_option("--sigma", bs.sigma, "Single strength");
  cmd_bs->add_option("--sweep", bs.sweep, "sigma axis for branch curves");
  cmd_bs->add_option("--preset", bs.preset, "fig4");
  cmd_bs->add_option("--tol", bs.tol, "Allowed closed-form vs oracle root difference");

  WaveguideOptions wg;
  auto* cmd_wg = app.add_subcommand("waveguide", "TE modes of the antisymmetric dielectric layer");
  cmd_wg->require_subcommand(1);
  cmd_wg->add_option("--a", wg.a, "Layer half-width");
  cmd_wg->add_option("--eps-b", wg.eps_b, "Background permittivity");
  cmd_wg->add_option("--eps-m", wg.eps_m, "Permittivity modulation amplitude");
  cmd_wg->add_option("--preset", wg.preset, "fig6");
  auto* wg_cut = cmd_wg->add_subcommand("cutoffs", "Cut-off points (k_n, q_n0)");
  wg_cut->add_option("--count", wg.count, "Number of cut-offs");
  auto* wg_disp = cmd_wg->add_subcommand("dispersion", "Guided-mode curves q_n(k)");
  wg_disp->add_option("--modes", wg.modes, "Modes n = 0..modes-1");
  wg_disp->add_option("--k", wg.k_axis, "k axis (default 0.05:12:240)");
  auto* wg_sec = cmd_wg->add_subcommand("sectors", "Transverse transmission below q = k sqrt(eps_b)");
  wg_sec->add_option("--k", wg.k_axis, "k axis (default 0.12:12:100)");
  wg_sec->add_option("--q-count", wg.q_count, "q samples per k");

  std::string verify_level = "quick";
  auto* cmd_verify = app.add_subcommand("verify", "Run the oracle cross-checks");
  cmd_verify->add_option("--level", verify_level, "quick | full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_tr) {
      return run_transmission(global, tr);
    }
    if (*cmd_res) {
      return run_resonances(global, resonance_count);
    }
    if (*cmd_bs) {
      return run_bound_states(global, bs);
    }
    if (*cmd_wg) {
      if (wg.preset == "fig6") {
        wg.a = 1.0;
        wg.eps_b = 2.25;
        wg.eps_m = 1.0;
        wg.count = 4;
        wg.modes = 4;
        wg.k_axis.clear();
        wg.q_count = 100;
      } else if (!wg.preset.empty()) {
        throw UsageError("waveguide: unknown preset '" + wg.preset + "' (fig6)");
      }
      const WaveguideConfig cfg(wg.a, wg.eps_b, wg.eps_m);
      if (auto w = cfg.warning()) {
        warn(*w);
      }
      if (*wg_cut) {
        return run_cutoffs(global, wg, cfg);
      }
      if (*wg_disp) {
        return run_dispersion(global, wg, cfg);
      }
      return run_sectors(global, wg, cfg);
    }
    return run_verify(global, verify_level);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
