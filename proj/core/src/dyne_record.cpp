#include "adyne/dyne_record.hpp"

#include <algorithm>
#include <cmath>

#include "adyne/angles.hpp"

namespace adyne {

void DyneRecord::accumulate(double i_dv, double lo_phase, double dv) {
  accumulate(i_dv, std::complex<double>{std::cos(lo_phase), std::sin(lo_phase)}, dv);
}

std::optional<double> epsilon_estimate(const DyneRecord& record, double eps) {
  const std::complex<double> c = record.c();
  if (record.a == std::complex<double>{} || c == std::complex<double>{}) return std::nullopt;
  const double arg_c = std::arg(c);
  const double arg_a = align_angle(std::arg(record.a), arg_c);
  return eps * arg_a + (1.0 - eps) * arg_c;
}

std::optional<double> variable_epsilon(const DyneRecord& record) {
  if (!(record.v > 0.0) || record.v >= 1.0) return std::nullopt;
  const double abs_c = std::abs(record.c());
  if (abs_c == 0.0) return std::nullopt;
  const double raw = (record.v * record.v - std::norm(record.b)) / abs_c *
                     std::sqrt(record.v / (1.0 - record.v));
  return std::clamp(raw, 0.0, 1.0);
}

EstimateSet finalize(const DyneRecord& record, std::optional<double> feedback_final) {
  EstimateSet est;
  if (feedback_final) est.feedback = wrap_angle(*feedback_final);
  if (record.a != std::complex<double>{}) est.arg_a = wrap_angle(std::arg(record.a));
  const std::complex<double> c = record.c();
  if (c != std::complex<double>{}) est.arg_c = wrap_angle(std::arg(c));
  return est;
}

}  // namespace adyne
