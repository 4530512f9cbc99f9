#pragma once

#include <vector>

namespace besovrates {

// Least-squares fit of log(error) against log(n): the slope is the
// empirical convergence rate (negative for a converging scheme).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;  // in log space
  double r_squared = 0.0;
  double ci_half_width = 0.0;  // 95% confidence half-width of the slope
  int points = 0;

  double ci_lo() const { return slope - ci_half_width; }
  double ci_hi() const { return slope + ci_half_width; }
};

/// Needs at least three points with positive errors.
RateFit fit_log_rate(const std::vector<double>& n_values,
                     const std::vector<double>& errors);

/// Median of a sample (copies; the input stays untouched).
double median(std::vector<double> values);

}  // namespace besovrates
