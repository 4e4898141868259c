#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "adyne/dyne_record.hpp"

namespace adyne {

enum class SchemeKind {
  heterodyne,            // fixed pi/2 rotation every step, no feedback
  simplified,            // d(phase) = I dv / sqrt(v), delayed data
  corrected_simplified,  // d(phase) = I dv / sqrt(v + alpha tau)
  arg_a,                 // phase estimate arg a from the delayed record
  const_eps,             // blend of arg a and arg c with fixed weight
  var_eps,               // blend with the time-dependent weight
};

/// Which time enters the 1/sqrt(v) gain of the simplified updates when the
/// consumed increment is delayed: the step being applied (current) or the end
/// of the interval the increment was recorded on (emission). The two differ
/// at order tau near v ~ tau; current time is the default.
enum class DelayDenominator { current_time, emission_time };

/// Tagged local-oscillator phase policy.
struct FeedbackScheme {
  SchemeKind kind = SchemeKind::heterodyne;
  double eps = 0.5;  // const_eps weight
  DelayDenominator denom = DelayDenominator::current_time;

  static FeedbackScheme heterodyne() { return {SchemeKind::heterodyne}; }
  static FeedbackScheme simplified(DelayDenominator d = DelayDenominator::current_time) {
    return {SchemeKind::simplified, 0.5, d};
  }
  static FeedbackScheme corrected_simplified(
      DelayDenominator d = DelayDenominator::current_time) {
    return {SchemeKind::corrected_simplified, 0.5, d};
  }
  static FeedbackScheme arg_a() { return {SchemeKind::arg_a}; }
  static FeedbackScheme const_eps(double eps);
  static FeedbackScheme var_eps() { return {SchemeKind::var_eps}; }

  /// Every scheme except heterodyne maintains a running phase estimate.
  bool has_intermediate_estimate() const { return kind != SchemeKind::heterodyne; }

  /// Stable token used in configs and CSV output.
  std::string name() const;
  static std::optional<FeedbackScheme> parse(std::string_view token);
};

/// Datum published into the delay line each step: the photocurrent increment
/// and the record snapshot including that step.
struct FeedbackDatum {
  double i_dv = 0.0;
  DyneRecord record;
};

/// Per-trajectory mutable state of the phase policy.
struct FeedbackState {
  double lo_phase = 0.0;
  double eps_memory = 1.0;  // last usable var_eps weight; starts arg_a-like
};

/// Static per-trajectory facts the policies need.
struct FeedbackContext {
  double dv = 0.0;
  std::int64_t delay_steps = 1;
  double alpha = 0.0;
  double lo_phase_origin = 0.0;
};

/// Advance the local-oscillator phase for `step`. `delayed` is the datum that
/// became visible this step, or nullptr during dead time, in which case every
/// scheme rotates by pi/2 per step.
void next_phase(const FeedbackScheme& scheme, FeedbackState& state, const FeedbackDatum* delayed,
                std::int64_t step, const FeedbackContext& ctx);

/// The running phase estimate lo_phase - pi/2, wrapped to (-pi, pi].
/// Heterodyne carries no estimate and yields nullopt.
std::optional<double> intermediate_estimate_of(const FeedbackScheme& scheme,
                                               const FeedbackState& state);

}  // namespace adyne
