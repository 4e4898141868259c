#pragma once

#include <cmath>
#include <stdexcept>

namespace adyne {

/// Coherent input signal with constant scaled amplitude over the run.
class SignalModel {
 public:
  SignalModel(double alpha, double true_phase) : alpha_(alpha), true_phase_(true_phase) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha) || !std::isfinite(true_phase)) {
      throw std::invalid_argument("SignalModel: alpha must be finite and >= 0");
    }
  }

  double alpha() const { return alpha_; }
  double true_phase() const { return true_phase_; }

  /// Mean photon number of the input state.
  double n_bar() const { return alpha_ * alpha_; }

 private:
  double alpha_;
  double true_phase_;
};

/// One photocurrent increment I*dv: deterministic quadrature projection of the
/// signal onto the local oscillator plus the white-noise increment dW.
inline double photocurrent_increment(const SignalModel& signal, double lo_phase, double dw,
                                     double dv) {
  return 2.0 * signal.alpha() * std::cos(signal.true_phase() - lo_phase) * dv + dw;
}

}  // namespace adyne
