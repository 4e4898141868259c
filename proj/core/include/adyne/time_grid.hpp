#pragma once

#include <cstdint>
#include <stdexcept>

namespace adyne {

/// Uniform discretization of the unit measurement interval.
///
/// The step count is restricted to powers of two so that every delay used by
/// the sweep protocol (also powers of two) divides the grid exactly.
class TimeGrid {
 public:
  explicit TimeGrid(std::int64_t n_steps) : n_steps_(n_steps) {
    if (n_steps < 2 || (n_steps & (n_steps - 1)) != 0) {
      throw std::invalid_argument("TimeGrid: n_steps must be a power of two >= 2");
    }
    dv_ = 1.0 / static_cast<double>(n_steps);
  }

  std::int64_t n_steps() const { return n_steps_; }
  double dv() const { return dv_; }

  /// Scaled time at the start of step k.
  double time_at(std::int64_t k) const { return static_cast<double>(k) * dv_; }

 private:
  std::int64_t n_steps_;
  double dv_;
};

}  // namespace adyne
