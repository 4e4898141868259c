#pragma once

#include <cmath>

namespace adyne {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kHalfPi = 1.57079632679489661923;

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double x) {
  double r = std::remainder(x, kTwoPi);
  return r <= -kPi ? r + kTwoPi : r;
}

/// Shift `a` by a multiple of 2*pi so it lands within pi of `ref`.
inline double align_angle(double a, double ref) {
  return ref + std::remainder(a - ref, kTwoPi);
}

}  // namespace adyne
