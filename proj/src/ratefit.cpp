#include "besovrates/ratefit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "besovrates/errors.hpp"

namespace besovrates {

namespace {

// two-sided 97.5% Student quantiles for df = 1..30; normal beyond
constexpr double kT975[30] = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};

double t_quantile(int df) {
  if (df < 1) return 0.0;
  if (df <= 30) return kT975[df - 1];
  return 1.960;
}

}  // namespace

RateFit fit_log_rate(const std::vector<double>& n_values,
                     const std::vector<double>& errors) {
  if (n_values.size() != errors.size() || n_values.size() < 3) {
    throw config_error("fit_log_rate: need at least three matching points");
  }
  const int m = static_cast<int>(n_values.size());
  std::vector<double> x(m), y(m);
  for (int i = 0; i < m; ++i) {
    if (!(n_values[i] > 0.0) || !(errors[i] > 0.0)) {
      throw config_error("fit_log_rate: values must be positive");
    }
    x[i] = std::log(n_values[i]);
    y[i] = std::log(errors[i]);
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw config_error("fit_log_rate: degenerate abscissas");

  RateFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (int i = 0; i < m; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.r_squared = std::min(1.0, std::max(0.0, fit.r_squared));
  if (m > 2) {
    const double se = std::sqrt(ss_res / (m - 2) / sxx);
    fit.ci_half_width = t_quantile(m - 2) * se;
  }
  return fit;
}

double median(std::vector<double> values) {
  if (values.empty()) throw config_error("median: empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  std::nth_element(values.begin(), values.begin() + mid - 1,
                   values.begin() + mid);
  return 0.5 * (values[mid - 1] + hi);
}

}  // namespace besovrates
