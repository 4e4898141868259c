#pragma once

#include <complex>
#include <optional>

namespace adyne {

/// Running functionals of the measurement record.
///
/// `a` and `b` are left-point Ito sums of the photocurrent against the local
/// oscillator phase factors; `v` is the scaled time covered so far. The best
/// running phase estimate is arg c(), and arg a is a good one while |b| is
/// small.
struct DyneRecord {
  std::complex<double> a{0.0, 0.0};
  std::complex<double> b{0.0, 0.0};
  double v = 0.0;

  /// Fold in one step: a += i_dv * e^{i phi}, b -= e^{2 i phi} dv, v += dv.
  void accumulate(double i_dv, double lo_phase, double dv);

  /// Same, with the phase factor precomputed by the caller.
  void accumulate(double i_dv, std::complex<double> exp_i_lo, double dv) {
    a += i_dv * exp_i_lo;
    b -= exp_i_lo * exp_i_lo * dv;
    v += dv;
  }

  /// Combined functional c = a v + b conj(a), evaluated fresh each call.
  std::complex<double> c() const { return a * v + b * std::conj(a); }
};

/// Phase estimate blending arg a and arg c with weight eps on arg a.
///
/// arg a is first shifted by a multiple of 2*pi to land within pi of arg c,
/// so the blend always interpolates between the two angles. Returns nullopt
/// when a or c vanishes exactly (no defined angle); callers fall back to the
/// remaining angle or to their previous estimate.
std::optional<double> epsilon_estimate(const DyneRecord& record, double eps);

/// Time-dependent blend weight (v^2 - |b|^2)/|c| * sqrt(v/(1-v)), clamped to
/// [0, 1]. Returns nullopt at the endpoints (v <= 0, v >= 1) and when |c| = 0;
/// callers reuse the previous weight.
std::optional<double> variable_epsilon(const DyneRecord& record);

/// The three final phase estimates of one trajectory, each wrapped to
/// (-pi, pi]. An estimate is absent when its defining functional vanished
/// exactly (arg a, arg c) or when the scheme carries no intermediate estimate
/// (feedback, heterodyne case).
struct EstimateSet {
  std::optional<double> feedback;
  std::optional<double> arg_a;
  std::optional<double> arg_c;
};

/// Final estimates from a completed record (v = 1) and the last feedback
/// phase estimate, if the scheme has one.
EstimateSet finalize(const DyneRecord& record, std::optional<double> feedback_final);

}  // namespace adyne
