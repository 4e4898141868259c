#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adyne/feedback.hpp"
#include "adyne/signal.hpp"
#include "adyne/time_grid.hpp"
#include "adyne/trajectory.hpp"

namespace adyne {

/// Holevo phase variance |<e^{i theta}>|^{-2} - 1; wrapping-safe. Throws
/// std::domain_error when the resultant vanishes (uniform phases).
double holevo_variance(std::span<const double> phases);

/// Both variance notions for one estimator over an ensemble, plus the
/// jackknife standard error of the Holevo estimate.
struct PhaseVariance {
  double holevo = 0.0;
  double moment = 0.0;  // mean squared wrapped deviation from the true phase
  double std_error = 0.0;
  std::int64_t n = 0;
};

PhaseVariance phase_variance(std::span<const double> phases, double true_phase);

enum class Estimator { feedback, arg_a, arg_c };
std::string estimator_name(Estimator e);
std::optional<Estimator> parse_estimator(std::string_view token);

struct EnsembleConfig {
  std::uint64_t master_seed = 1;
  FeedbackScheme scheme;
  double alpha = 10.0;
  double true_phase = 0.0;
  std::int64_t n_steps = 1 << 14;
  std::int64_t delay_steps = 1;
  std::int64_t n_traj = 4000;
  double lo_phase_origin = 0.0;

  void validate() const;
  TrajectoryConfig trajectory_config() const;
  double tau() const { return static_cast<double>(delay_steps) / static_cast<double>(n_steps); }
};

struct EnsembleSummary {
  std::optional<PhaseVariance> feedback;  // absent for heterodyne
  PhaseVariance arg_a;
  PhaseVariance arg_c;
  double mean_inv_np = 0.0;  // <1/n_p> over the mapped squeezed states
  double mean_abs_b = 0.0;
  double max_abs_b = 0.0;
  std::int64_t invalid_count = 0;  // trajectories with any undefined estimate

  const PhaseVariance* estimator(Estimator e) const;
};

/// Simulate n_traj independent trajectories and reduce. Trajectory j uses the
/// noise stream (master_seed, j); reduction is in index order, so the summary
/// is identical for every thread count.
EnsembleSummary run_ensemble(const EnsembleConfig& cfg, int threads = 0);

struct SweepEntry {
  std::int64_t delay_steps = 0;
  double tau = 0.0;
  EnsembleSummary summary;
};

/// One ensemble per delay. Each delay derives its own seed from the base
/// seed, so the runs are statistically independent. Delays must be sorted
/// ascending and start at 1 (the no-delay protocol).
std::vector<SweepEntry> delay_sweep(const EnsembleConfig& base,
                                    std::span<const std::int64_t> delays, int threads = 0);

struct ExcessVariance {
  double baseline = 0.0;
  std::vector<double> excess;
};

/// Baseline-minimum rule: the no-delay variance estimate is the minimum over
/// the first k_baseline sweep variances; excess = variance - baseline.
ExcessVariance excess_variance(std::span<const double> variances, int k_baseline = 6);

struct InverseMoment {
  double direct = 0.0;     // sample mean of 1/n
  double expansion = 0.0;  // 1/<n> + Var(n)/<n>^3
};

/// Mean inverse photon number, computed directly and via the two-term
/// moment expansion for comparison. All values must be positive.
InverseMoment inverse_photon_moment(std::span<const double> n_values);

}  // namespace adyne
