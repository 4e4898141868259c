#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace adyne {

/// Fixed-latency FIFO carrying feedback data across the loop delay.
///
/// The datum published at step j becomes readable at step j + delay. Reads
/// before the first usable datum report dead time (nullptr); reads of data
/// that were never published, or that have already been overwritten, are
/// protocol violations.
template <typename T>
class DelayLine {
 public:
  explicit DelayLine(std::int64_t delay_steps) : delay_(delay_steps), ring_(delay_steps) {
    if (delay_steps < 1) {
      throw std::invalid_argument("DelayLine: delay_steps must be >= 1");
    }
  }

  std::int64_t delay_steps() const { return delay_; }
  std::int64_t published() const { return count_; }

  /// Publish the datum for the next step (steps are published in order).
  void publish(const T& datum) {
    ring_[count_ % delay_] = datum;
    ++count_;
  }

  /// Datum visible at `step`, or nullptr during dead time (step < delay).
  const T* read(std::int64_t step) const {
    if (step < 0) throw std::invalid_argument("DelayLine: negative step");
    const std::int64_t idx = step - delay_;
    if (idx < 0) return nullptr;  // dead time
    if (idx >= count_) throw std::logic_error("DelayLine: read past last published step");
    if (idx < count_ - delay_) throw std::logic_error("DelayLine: read of overwritten datum");
    return &ring_[idx % delay_];
  }

 private:
  std::int64_t delay_;
  std::int64_t count_ = 0;
  std::vector<T> ring_;
};

}  // namespace adyne
