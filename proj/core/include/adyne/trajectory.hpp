#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "adyne/delay_line.hpp"
#include "adyne/dyne_record.hpp"
#include "adyne/feedback.hpp"
#include "adyne/noise.hpp"
#include "adyne/signal.hpp"
#include "adyne/theory.hpp"
#include "adyne/time_grid.hpp"

namespace adyne {

struct TrajectoryConfig {
  TimeGrid grid;
  SignalModel signal;
  FeedbackScheme scheme;
  std::int64_t delay_steps = 1;
  double lo_phase_origin = 0.0;

  void validate() const {
    if (delay_steps < 1 || delay_steps > grid.n_steps()) {
      throw std::invalid_argument("TrajectoryConfig: delay_steps must lie in [1, n_steps]");
    }
  }
};

/// Per-step observation passed to an optional trace callback.
struct StepSample {
  std::int64_t step = 0;
  double lo_phase = 0.0;
  double i_dv = 0.0;
  DyneRecord record;  // state after this step
  std::optional<double> eps;
};

using StepTrace = std::function<void(const StepSample&)>;

struct TrajectoryResult {
  EstimateSet estimates;
  DyneRecord record;          // final record, v = 1
  std::complex<double> c;     // final combined functional
  double abs_b = 0.0;
  std::optional<double> n_photon;  // photon number of the mapped squeezed state
  std::optional<double> zeta_mag;
};

/// Simulate one trajectory. `wiener(step)` must return the increment dW for
/// that step, with variance grid.dv(); the provided NoiseStream overload does.
///
/// Enforces the record ceiling |b(1)| <= 1 - tau + 2 dv as a hard invariant.
template <typename Noise>
  requires std::invocable<Noise&, std::int64_t>
TrajectoryResult run_trajectory(const TrajectoryConfig& cfg, Noise&& wiener,
                                const StepTrace* trace = nullptr) {
  cfg.validate();
  const std::int64_t n = cfg.grid.n_steps();
  const double dv = cfg.grid.dv();
  const FeedbackContext ctx{dv, cfg.delay_steps, cfg.signal.alpha(), cfg.lo_phase_origin};

  FeedbackState state;
  state.lo_phase = cfg.lo_phase_origin;
  DelayLine<FeedbackDatum> line(cfg.delay_steps);
  DyneRecord record;

  for (std::int64_t k = 0; k < n; ++k) {
    const FeedbackDatum* delayed = line.read(k);
    next_phase(cfg.scheme, state, delayed, k, ctx);
    const double dw = wiener(k);
    const double i_dv = photocurrent_increment(cfg.signal, state.lo_phase, dw, dv);
    const std::complex<double> exp_i_lo{std::cos(state.lo_phase), std::sin(state.lo_phase)};
    record.accumulate(i_dv, exp_i_lo, dv);
    line.publish({i_dv, record});
    if (trace) {
      StepSample sample{k, state.lo_phase, i_dv, record, std::nullopt};
      if (cfg.scheme.kind == SchemeKind::const_eps) sample.eps = cfg.scheme.eps;
      if (cfg.scheme.kind == SchemeKind::var_eps) sample.eps = state.eps_memory;
      (*trace)(sample);
    }
  }

  const double tau = static_cast<double>(cfg.delay_steps) * dv;
  TrajectoryResult result;
  result.record = record;
  result.c = record.c();
  result.abs_b = std::abs(record.b);
  if (result.abs_b > 1.0 - tau + 2.0 * dv + 1e-9) {
    throw std::runtime_error("trajectory invariant violated: |b(1)| exceeds 1 - tau + 2 dv");
  }
  result.estimates = finalize(record, intermediate_estimate_of(cfg.scheme, state));
  if (result.abs_b < 1.0) {
    const SqueezeParams p = squeeze_params(record.a, record.b, record.v);
    result.n_photon = squeezed_photon_number(p);
    result.zeta_mag = std::abs(p.zeta);
  }
  return result;
}

inline TrajectoryResult run_trajectory(const TrajectoryConfig& cfg, const NoiseStream& noise,
                                       const StepTrace* trace = nullptr) {
  const double dv = cfg.grid.dv();
  return run_trajectory(
      cfg, [&noise, dv](std::int64_t step) { return noise.wiener_increment(step, dv); }, trace);
}

}  // namespace adyne
