#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "adyne/linearized.hpp"
#include "adyne/stats.hpp"
#include "adyne/theory.hpp"
#include "adyne/trajectory.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "svg_plot.hpp"

namespace adyne::cli {

namespace {

constexpr double kSlopeBandLo = 0.3;
constexpr double kSlopeBandHi = 0.6;
constexpr double kAlphaTauCutoff = 0.3;

ExperimentConfig load_config(const RunOptions& opt) {
  ExperimentConfig cfg = ExperimentConfig::from_file(opt.config_path);
  if (opt.out_dir) cfg.out_dir = *opt.out_dir;
  if (opt.seed) cfg.master_seed = *opt.seed;
  return cfg;
}

/// Write the whole file at once; nothing is left behind on failure.
void write_file(const std::filesystem::path& path, const std::string& content) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string alpha_label(double alpha) { return "a=" + format_double(alpha); }

/// The two sweep figures, built from the CSV alone.
std::string render_excess_figure(const std::vector<SweepRow>& rows) {
  PlotSpec spec;
  spec.title = "Excess variance of the final feedback estimate vs delay";
  spec.x_label = "tau";
  spec.y_label = "excess phase variance";
  std::map<std::string, Series> by_key;
  double tau_min = 1.0;
  double tau_max = 0.0;
  for (const SweepRow& r : rows) {
    if (r.estimator != "feedback") continue;
    tau_min = std::min(tau_min, r.tau);
    tau_max = std::max(tau_max, r.tau);
    if (!(r.excess_var > 0.0)) continue;
    Series& s = by_key[r.scheme + ", " + alpha_label(r.alpha)];
    s.label = r.scheme + ", " + alpha_label(r.alpha);
    s.marker = Marker::circle;
    s.x.push_back(r.tau);
    s.y.push_back(r.excess_var);
  }
  for (auto& [key, series] : by_key) spec.series.push_back(series);
  if (tau_max > tau_min) {
    Series ref;
    ref.label = "tau/2";
    ref.color = "#000000";
    ref.dashed = true;
    ref.x = {tau_min, tau_max};
    ref.y = {tau_min / 2.0, tau_max / 2.0};
    spec.series.push_back(ref);
  }
  return render_svg(spec);
}

std::string render_introduced_figure(const std::vector<SweepRow>& rows) {
  PlotSpec spec;
  spec.title = "Introduced variance of the best estimate (arg c) vs delay";
  spec.x_label = "tau";
  spec.y_label = "introduced phase variance";
  std::map<std::string, Series> by_key;
  std::map<std::string, Series> theory;
  for (const SweepRow& r : rows) {
    if (r.estimator != "arg-c") continue;
    const double introduced = r.holevo_var - 1.0 / (4.0 * r.n_bar);
    if (introduced > 0.0) {
      Series& s = by_key[r.scheme + ", " + alpha_label(r.alpha)];
      s.label = r.scheme + ", " + alpha_label(r.alpha);
      s.marker = Marker::cross;
      s.x.push_back(r.tau);
      s.y.push_back(introduced);
    }
    const std::string nb = format_double(r.n_bar);
    Series& lim = theory["limit n=" + nb];
    lim.label = "limit n=" + nb;
    lim.color = "#000000";
    if (lim.x.empty() || lim.x.back() != r.tau) {
      lim.x.push_back(r.tau);
      lim.y.push_back(r.theory_limit);
    }
    Series& het = theory["heterodyne n=" + nb];
    het.label = "heterodyne n=" + nb;
    het.color = "#555555";
    het.dashed = true;
    if (het.x.empty() || het.x.back() != r.tau) {
      het.x.push_back(r.tau);
      het.y.push_back(r.heterodyne_ref);
    }
  }
  for (auto& [key, series] : by_key) spec.series.push_back(series);
  for (auto& [key, series] : theory) spec.series.push_back(series);
  return render_svg(spec);
}

struct SlopeReport {
  double alpha = 0.0;
  LinearFit fit;
  int points = 0;
};

/// Slope of the feedback-estimate excess variance against tau for one alpha,
/// using only delays with alpha * tau <= cutoff.
SlopeReport excess_slope(const ExperimentConfig& cfg, double alpha, int threads) {
  EnsembleConfig base;
  base.master_seed = mix_seed(cfg.master_seed, static_cast<std::uint64_t>(std::llround(alpha * 64)));
  base.scheme = FeedbackScheme::simplified();
  for (const FeedbackScheme& s : cfg.schemes) {
    if (s.kind == SchemeKind::simplified) base.scheme = s;  // honor the denom toggle
  }
  base.alpha = alpha;
  base.true_phase = cfg.true_phase;
  base.n_steps = cfg.n_steps;
  base.n_traj = cfg.n_traj;
  const auto sweep = delay_sweep(base, cfg.delays, threads);

  std::vector<double> variances;
  for (const SweepEntry& e : sweep) variances.push_back(e.summary.feedback->holevo);
  const ExcessVariance excess = excess_variance(variances, cfg.baseline_window);

  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> ses;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    if (alpha * sweep[i].tau > kAlphaTauCutoff) continue;
    xs.push_back(sweep[i].tau);
    ys.push_back(excess.excess[i]);
    ses.push_back(sweep[i].summary.feedback->std_error);
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("slope fit: fewer than 3 delays with alpha*tau <= 0.3");
  }
  SlopeReport rep;
  rep.alpha = alpha;
  rep.fit = fit_line(xs, ys, ses);
  rep.points = static_cast<int>(xs.size());
  return rep;
}

}  // namespace

int cmd_sweep(const RunOptions& opt) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(opt);
    cfg.validate_sweep_fields();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  try {
    std::vector<SweepRow> rows;
    for (std::size_t si = 0; si < cfg.schemes.size(); ++si) {
      const FeedbackScheme& scheme = cfg.schemes[si];
      for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        const double alpha = cfg.alphas[ai];
        EnsembleConfig base;
        base.master_seed = mix_seed(mix_seed(cfg.master_seed, si), ai);
        base.scheme = scheme;
        base.alpha = alpha;
        base.true_phase = cfg.true_phase;
        base.n_steps = cfg.n_steps;
        base.n_traj = cfg.n_traj;
        const auto sweep = delay_sweep(base, cfg.delays, opt.threads);

        for (Estimator est : cfg.estimators) {
          if (est == Estimator::feedback && !scheme.has_intermediate_estimate()) continue;
          std::vector<double> variances;
          for (const SweepEntry& e : sweep) variances.push_back(e.summary.estimator(est)->holevo);
          const ExcessVariance excess = excess_variance(variances, cfg.baseline_window);

          for (std::size_t di = 0; di < sweep.size(); ++di) {
            const SweepEntry& e = sweep[di];
            const PhaseVariance& pv = *e.summary.estimator(est);
            SweepRow row;
            row.scheme = scheme.name();
            row.alpha = alpha;
            row.n_bar = alpha * alpha;
            row.delay_steps = e.delay_steps;
            row.tau = e.tau;
            row.estimator = estimator_name(est);
            row.holevo_var = pv.holevo;
            row.moment_var = pv.moment;
            row.std_error = pv.std_error;
            row.baseline_var = excess.baseline;
            row.excess_var = excess.excess[di];
            row.mean_abs_b = e.summary.mean_abs_b;
            row.mean_inv_np = e.summary.mean_inv_np;
            row.invalid_count = e.summary.invalid_count;
            row.theory_limit = delay_limit(e.tau, row.n_bar);
            row.theory_corrected_limit =
                e.summary.mean_inv_np > 0.0 ? corrected_limit(e.summary.mean_inv_np, e.tau) : 0.0;
            row.heterodyne_ref = heterodyne_var(row.n_bar);
            rows.push_back(std::move(row));
          }
        }
      }
    }

    const std::filesystem::path out_dir(cfg.out_dir);
    const std::filesystem::path csv_path = out_dir / "results.csv";
    write_file(csv_path, write_sweep_csv(rows));

    // Figures are rendered from the CSV on disk, never from in-memory state.
    std::ifstream csv_in(csv_path);
    const std::vector<SweepRow> parsed = read_sweep_csv(csv_in);
    write_file(out_dir / "excess_vs_tau.svg", render_excess_figure(parsed));
    write_file(out_dir / "introduced_vs_tau.svg", render_introduced_figure(parsed));
    std::printf("sweep: wrote %zu rows to %s\n", rows.size(), csv_path.string().c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sweep failed: %s\n", e.what());
    return 3;
  }
}

int cmd_markone_check(const RunOptions& opt) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(opt);
    // This command runs its own simplified-feedback sweeps; the schemes and
    // estimators lists are not consulted.
    if (cfg.schemes.empty()) cfg.schemes = {FeedbackScheme::simplified()};
    if (cfg.alphas.empty()) throw ConfigError("alphas must be a nonempty list");
    cfg.validate_sweep_fields();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  try {
    std::ostringstream report;

    LinearizedConfig lin;
    lin.alpha = cfg.lin_alpha;
    lin.v1 = cfg.lin_v1;
    lin.n_steps = cfg.lin_steps;
    const LinearFit lin_fit = slope_vs_tau(lin, cfg.lin_taus, cfg.lin_paths,
                                           mix_seed(cfg.master_seed, 0x11u), opt.threads);
    const bool lin_pass = std::abs(lin_fit.slope - 0.5) <= 3.0 * lin_fit.slope_se;
    report << "linearized alpha=" << format_double(cfg.lin_alpha) << ": slope "
           << format_double(lin_fit.slope) << " +/- " << format_double(lin_fit.slope_se)
           << " vs 0.5 -> " << (lin_pass ? "PASS" : "FAIL") << "\n";

    double slope_sum = 0.0;
    for (double alpha : cfg.alphas) {
      const SlopeReport rep = excess_slope(cfg, alpha, opt.threads);
      slope_sum += rep.fit.slope;
      report << "full sim alpha=" << format_double(alpha) << ": slope "
             << format_double(rep.fit.slope) << " +/- " << format_double(rep.fit.slope_se)
             << " (" << rep.points << " delays)\n";
    }
    const double mean_slope = slope_sum / static_cast<double>(cfg.alphas.size());
    const bool full_pass = mean_slope >= kSlopeBandLo && mean_slope <= kSlopeBandHi;
    report << "full sim mean slope " << format_double(mean_slope) << " vs ["
           << format_double(kSlopeBandLo) << ", " << format_double(kSlopeBandHi) << "] -> "
           << (full_pass ? "PASS" : "FAIL") << "\n";

    const std::string text = report.str();
    std::fputs(text.c_str(), stdout);
    write_file(std::filesystem::path(cfg.out_dir) / "markone_report.txt", text);
    return (lin_pass && full_pass) ? 0 : 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "markone-check: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "markone-check failed: %s\n", e.what());
    return 3;
  }
}

int cmd_theory(const RunOptions& opt) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(opt);
    if (cfg.theory_n_bars.empty() || cfg.theory_taus.empty()) {
      throw ConfigError("theory_n_bars and theory_taus must be nonempty");
    }
    for (double nb : cfg.theory_n_bars) {
      if (!(nb > 1.0)) throw ConfigError("theory_n_bars entries must be > 1");
    }
    for (double t : cfg.theory_taus) {
      if (!(t > 0.0 && t <= 1.0)) throw ConfigError("theory_taus entries must lie in (0, 1]");
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  try {
    const std::vector<std::string> header = {
        "n_bar", "alpha", "tau", "limit", "limit_small_tau", "heterodyne",
        "mark_two_intro", "no_delay_limit", "mark_one_var", "quadrature"};
    std::string csv = csv_line(header);
    for (double nb : cfg.theory_n_bars) {
      const double alpha = std::sqrt(nb);
      const double quadrature = alpha >= 10.0 ? perturbation_quadrature(alpha) : 0.0;
      for (double tau : cfg.theory_taus) {
        csv += csv_line({format_double(nb), format_double(alpha), format_double(tau),
                         format_double(delay_limit(tau, nb)),
                         format_double(delay_limit_small_tau(tau, nb)),
                         format_double(heterodyne_var(nb)), format_double(mark_two_intro_var(nb)),
                         format_double(no_delay_limit(nb)),
                         format_double(mark_one_delay_var(alpha, tau)),
                         format_double(quadrature)});
      }
    }
    const std::filesystem::path path = std::filesystem::path(cfg.out_dir) / "theory.csv";
    write_file(path, csv);
    std::printf("theory: wrote %s\n", path.string().c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "theory failed: %s\n", e.what());
    return 3;
  }
}

int cmd_traj(const RunOptions& opt) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(opt);
    cfg.validate_sweep_fields();
    if (cfg.schemes.size() != 1 || cfg.alphas.size() != 1 || cfg.delays.size() != 1) {
      throw ConfigError("traj requires exactly one scheme, one alpha and one delay");
    }
    if (opt.trajectory_index < 0 || opt.trajectory_index >= cfg.n_traj) {
      throw ConfigError("trajectory index out of range [0, n_traj)");
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  try {
    TrajectoryConfig tcfg{TimeGrid(cfg.n_steps), SignalModel(cfg.alphas[0], cfg.true_phase),
                          cfg.schemes[0], cfg.delays[0], 0.0};
    const std::vector<std::string> header = {"step", "v",    "lo_phase", "i_dv", "a_re", "a_im",
                                             "b_re", "b_im", "c_re",     "c_im", "eps"};
    std::string csv = csv_line(header);
    const StepTrace trace = [&csv](const StepSample& s) {
      const std::complex<double> c = s.record.c();
      csv += csv_line({std::to_string(s.step), format_double(s.record.v),
                       format_double(s.lo_phase), format_double(s.i_dv),
                       format_double(s.record.a.real()), format_double(s.record.a.imag()),
                       format_double(s.record.b.real()), format_double(s.record.b.imag()),
                       format_double(c.real()), format_double(c.imag()),
                       s.eps ? format_double(*s.eps) : std::string()});
    };
    // The ensemble seeds trajectory j with (master_seed, j); the dump uses the
    // same stream so rows match ensemble members exactly.
    run_trajectory(tcfg, NoiseStream(cfg.master_seed, opt.trajectory_index), &trace);
    const std::filesystem::path path = std::filesystem::path(cfg.out_dir) / "trajectory.csv";
    write_file(path, csv);
    std::printf("traj: wrote %s\n", path.string().c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "traj failed: %s\n", e.what());
    return 3;
  }
}

}  // namespace adyne::cli
