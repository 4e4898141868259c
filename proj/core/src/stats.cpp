#include "adyne/stats.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "adyne/angles.hpp"
#include "adyne/parallel.hpp"

namespace adyne {

double holevo_variance(std::span<const double> phases) {
  if (phases.empty()) throw std::invalid_argument("holevo_variance: empty sample");
  std::complex<double> sum{0.0, 0.0};
  for (double t : phases) sum += std::complex<double>{std::cos(t), std::sin(t)};
  const double r2 = std::norm(sum / static_cast<double>(phases.size()));
  if (r2 == 0.0) throw std::domain_error("holevo_variance: zero resultant, phases unmeasurable");
  return 1.0 / r2 - 1.0;
}

PhaseVariance phase_variance(std::span<const double> phases, double true_phase) {
  const std::int64_t n = static_cast<std::int64_t>(phases.size());
  if (n == 0) throw std::invalid_argument("phase_variance: empty sample");
  std::complex<double> sum{0.0, 0.0};
  double moment = 0.0;
  for (double t : phases) {
    sum += std::complex<double>{std::cos(t), std::sin(t)};
    const double d = wrap_angle(t - true_phase);
    moment += d * d;
  }
  const double r2 = std::norm(sum / static_cast<double>(n));
  if (r2 == 0.0) throw std::domain_error("phase_variance: zero resultant, phases unmeasurable");

  PhaseVariance out;
  out.n = n;
  out.holevo = 1.0 / r2 - 1.0;
  out.moment = moment / static_cast<double>(n);
  if (n >= 2) {
    // Delete-one jackknife of the Holevo estimate.
    double mean_loo = 0.0;
    std::vector<double> loo(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
      const std::complex<double> m =
          (sum - std::complex<double>{std::cos(phases[j]), std::sin(phases[j])}) /
          static_cast<double>(n - 1);
      const double v = 1.0 / std::norm(m) - 1.0;
      loo[static_cast<std::size_t>(j)] = v;
      mean_loo += v;
    }
    mean_loo /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
    out.std_error = std::sqrt(ss * static_cast<double>(n - 1) / static_cast<double>(n));
  }
  return out;
}

std::string estimator_name(Estimator e) {
  switch (e) {
    case Estimator::feedback: return "feedback";
    case Estimator::arg_a: return "arg-a";
    case Estimator::arg_c: return "arg-c";
  }
  return "?";
}

std::optional<Estimator> parse_estimator(std::string_view token) {
  if (token == "feedback") return Estimator::feedback;
  if (token == "arg-a") return Estimator::arg_a;
  if (token == "arg-c") return Estimator::arg_c;
  return std::nullopt;
}

void EnsembleConfig::validate() const {
  TimeGrid grid(n_steps);  // power-of-two check
  if (n_traj < 2) throw std::invalid_argument("EnsembleConfig: n_traj must be >= 2");
  if (delay_steps < 1 || delay_steps > n_steps / 4) {
    throw std::invalid_argument("EnsembleConfig: delay_steps must lie in [1, n_steps/4]");
  }
  SignalModel check(alpha, true_phase);
  (void)grid;
  (void)check;
}

TrajectoryConfig EnsembleConfig::trajectory_config() const {
  return TrajectoryConfig{TimeGrid(n_steps), SignalModel(alpha, true_phase), scheme, delay_steps,
                          lo_phase_origin};
}

const PhaseVariance* EnsembleSummary::estimator(Estimator e) const {
  switch (e) {
    case Estimator::feedback: return feedback ? &*feedback : nullptr;
    case Estimator::arg_a: return &arg_a;
    case Estimator::arg_c: return &arg_c;
  }
  return nullptr;
}

EnsembleSummary run_ensemble(const EnsembleConfig& cfg, int threads) {
  cfg.validate();
  const TrajectoryConfig tcfg = cfg.trajectory_config();

  struct Cell {
    EstimateSet estimates;
    double abs_b = 0.0;
    std::optional<double> inv_np;
  };
  std::vector<Cell> cells(static_cast<std::size_t>(cfg.n_traj));
  parallel_for(cfg.n_traj, threads, [&](std::int64_t j) {
    const TrajectoryResult r = run_trajectory(tcfg, NoiseStream(cfg.master_seed, j));
    Cell& cell = cells[static_cast<std::size_t>(j)];
    cell.estimates = r.estimates;
    cell.abs_b = r.abs_b;
    if (r.n_photon && *r.n_photon > 0.0) cell.inv_np = 1.0 / *r.n_photon;
  });

  // Index-ordered reduction.
  std::vector<double> fb;
  std::vector<double> aa;
  std::vector<double> ac;
  fb.reserve(cells.size());
  aa.reserve(cells.size());
  ac.reserve(cells.size());
  EnsembleSummary out;
  double sum_inv_np = 0.0;
  std::int64_t n_inv_np = 0;
  double sum_abs_b = 0.0;
  const bool expects_feedback = cfg.scheme.has_intermediate_estimate();
  for (const Cell& cell : cells) {
    bool invalid = !cell.estimates.arg_a || !cell.estimates.arg_c || !cell.inv_np;
    if (expects_feedback && !cell.estimates.feedback) invalid = true;
    if (invalid) ++out.invalid_count;
    if (cell.estimates.feedback) fb.push_back(*cell.estimates.feedback);
    if (cell.estimates.arg_a) aa.push_back(*cell.estimates.arg_a);
    if (cell.estimates.arg_c) ac.push_back(*cell.estimates.arg_c);
    if (cell.inv_np) {
      sum_inv_np += *cell.inv_np;
      ++n_inv_np;
    }
    sum_abs_b += cell.abs_b;
    out.max_abs_b = std::max(out.max_abs_b, cell.abs_b);
  }
  if (expects_feedback) out.feedback = phase_variance(fb, cfg.true_phase);
  out.arg_a = phase_variance(aa, cfg.true_phase);
  out.arg_c = phase_variance(ac, cfg.true_phase);
  out.mean_inv_np = n_inv_np > 0 ? sum_inv_np / static_cast<double>(n_inv_np) : 0.0;
  out.mean_abs_b = sum_abs_b / static_cast<double>(cells.size());
  return out;
}

std::vector<SweepEntry> delay_sweep(const EnsembleConfig& base,
                                    std::span<const std::int64_t> delays, int threads) {
  if (delays.empty() || delays.front() != 1) {
    throw std::invalid_argument("delay_sweep: delays must start at 1");
  }
  for (std::size_t i = 1; i < delays.size(); ++i) {
    if (delays[i] <= delays[i - 1]) {
      throw std::invalid_argument("delay_sweep: delays must be sorted ascending");
    }
  }
  std::vector<SweepEntry> sweep;
  sweep.reserve(delays.size());
  for (std::int64_t d : delays) {
    EnsembleConfig cfg = base;
    cfg.delay_steps = d;
    cfg.master_seed = mix_seed(base.master_seed, static_cast<std::uint64_t>(d));
    SweepEntry entry;
    entry.delay_steps = d;
    entry.tau = cfg.tau();
    entry.summary = run_ensemble(cfg, threads);
    sweep.push_back(std::move(entry));
  }
  return sweep;
}

ExcessVariance excess_variance(std::span<const double> variances, int k_baseline) {
  if (variances.empty()) throw std::invalid_argument("excess_variance: empty sweep");
  if (k_baseline < 1) throw std::invalid_argument("excess_variance: k_baseline must be >= 1");
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_baseline),
                                              variances.size());
  ExcessVariance out;
  out.baseline = *std::min_element(variances.begin(), variances.begin() + k);
  out.excess.reserve(variances.size());
  for (double v : variances) out.excess.push_back(v - out.baseline);
  return out;
}

InverseMoment inverse_photon_moment(std::span<const double> n_values) {
  if (n_values.empty()) throw std::invalid_argument("inverse_photon_moment: empty sample");
  double mean = 0.0;
  double direct = 0.0;
  for (double v : n_values) {
    if (!(v > 0.0)) throw std::domain_error("inverse_photon_moment: values must be > 0");
    mean += v;
    direct += 1.0 / v;
  }
  const double n = static_cast<double>(n_values.size());
  mean /= n;
  direct /= n;
  double var = 0.0;
  for (double v : n_values) var += (v - mean) * (v - mean);
  var /= n;
  InverseMoment out;
  out.direct = direct;
  out.expansion = 1.0 / mean + var / (mean * mean * mean);
  return out;
}

}  // namespace adyne
