#include "adyne/linearized.hpp"

#include <vector>

#include "adyne/parallel.hpp"

namespace adyne {

void LinearizedConfig::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("LinearizedConfig: alpha must be >= 0");
  if (!(v1 > 0.0 && v1 < 1.0)) throw std::invalid_argument("LinearizedConfig: v1 must lie in (0, 1)");
  if (n_steps < 16) throw std::invalid_argument("LinearizedConfig: n_steps too small");
  if (!(tau >= 0.0) || tau >= 1.0 - v1) {
    throw std::invalid_argument("LinearizedConfig: tau must lie in [0, 1 - v1)");
  }
  const double steps = tau * static_cast<double>(n_steps);
  if (std::abs(steps - std::llround(steps)) > 1e-9) {
    throw std::invalid_argument("LinearizedConfig: tau must be an integer number of grid steps");
  }
  if (initial_variance && !(*initial_variance >= 0.0)) {
    throw std::invalid_argument("LinearizedConfig: initial_variance must be >= 0");
  }
}

double simulate_linearized(const LinearizedConfig& cfg, const NoiseStream& noise) {
  return simulate_linearized(cfg, [&noise](std::int64_t step) { return noise.normal(step); });
}

VarianceEstimate linearized_variance(const LinearizedConfig& cfg, std::int64_t n_paths,
                                     std::uint64_t seed, int threads) {
  cfg.validate();
  if (n_paths < 2) throw std::invalid_argument("linearized_variance: n_paths must be >= 2");
  std::vector<double> terminal(static_cast<std::size_t>(n_paths));
  parallel_for(n_paths, threads, [&](std::int64_t j) {
    terminal[static_cast<std::size_t>(j)] = simulate_linearized(cfg, NoiseStream(seed, j));
  });
  double mean = 0.0;
  for (double t : terminal) mean += t;
  mean /= static_cast<double>(n_paths);
  double ss = 0.0;
  for (double t : terminal) ss += (t - mean) * (t - mean);
  VarianceEstimate est;
  est.n = n_paths;
  est.variance = ss / static_cast<double>(n_paths - 1);
  est.std_error = est.variance * std::sqrt(2.0 / static_cast<double>(n_paths - 1));
  return est;
}

LinearFit slope_vs_tau(const LinearizedConfig& base, std::span<const double> taus,
                       std::int64_t ensemble_size, std::uint64_t seed, int threads) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> ses;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (base.alpha * taus[i] > 0.3) continue;
    LinearizedConfig cfg = base;
    cfg.tau = taus[i];
    const VarianceEstimate est =
        linearized_variance(cfg, ensemble_size, mix_seed(seed, i), threads);
    xs.push_back(taus[i]);
    ys.push_back(est.variance);
    ses.push_back(est.std_error);
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("slope_vs_tau: fewer than 3 delays with alpha * tau <= 0.3");
  }
  return fit_line(xs, ys, ses);
}

}  // namespace adyne
