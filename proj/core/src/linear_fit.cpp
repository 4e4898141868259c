#include "adyne/linear_fit.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace adyne {

namespace {

LinearFit ols(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) {
    throw std::invalid_argument("fit_line: need matching x/y with at least 2 points");
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

}  // namespace

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  LinearFit fit = ols(x, y);
  const std::size_t n = x.size();
  if (n < 3) return fit;
  double mx = 0.0;
  for (double v : x) mx += v;
  mx /= static_cast<double>(n);
  double sxx = 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ss_res += r * r;
  }
  const double s2 = ss_res / static_cast<double>(n - 2);
  fit.slope_se = std::sqrt(s2 / sxx);
  fit.intercept_se = std::sqrt(s2 * (1.0 / static_cast<double>(n) + mx * mx / sxx));
  return fit;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y,
                   std::span<const double> y_se) {
  if (y_se.size() != x.size()) {
    throw std::invalid_argument("fit_line: y_se size must match x");
  }
  LinearFit fit = ols(x, y);
  const std::size_t n = x.size();
  double mx = 0.0;
  for (double v : x) mx += v;
  mx /= static_cast<double>(n);
  double sxx = 0.0;
  for (double v : x) sxx += (v - mx) * (v - mx);
  double var_slope = 0.0;
  double var_intercept = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ci = (x[i] - mx) / sxx;
    const double di = 1.0 / static_cast<double>(n) - mx * ci;
    var_slope += ci * ci * y_se[i] * y_se[i];
    var_intercept += di * di * y_se[i] * y_se[i];
  }
  fit.slope_se = std::sqrt(var_slope);
  fit.intercept_se = std::sqrt(var_intercept);
  return fit;
}

}  // namespace adyne
