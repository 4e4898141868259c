#pragma once

#include <span>

namespace adyne {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double intercept_se = 0.0;
};

/// Ordinary least squares y = intercept + slope x. Standard errors come from
/// the residual variance (requires at least 3 points).
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Same fit, but standard errors propagated from known per-point errors y_se
/// instead of the residuals. The slope and intercept are the unweighted OLS
/// estimates either way.
LinearFit fit_line(std::span<const double> x, std::span<const double> y,
                   std::span<const double> y_se);

}  // namespace adyne
