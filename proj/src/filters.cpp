#include "besovrates/filters.hpp"

#include <cmath>
#include <stdexcept>

#include "besovrates/errors.hpp"

namespace besovrates {

namespace {

double exp_kernel(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

}  // namespace

double smooth_transition(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = exp_kernel(u);
  const double b = exp_kernel(1.0 - u);
  return a / (a + b);
}

double lp_bump(double x, double eps0) {
  const double a = std::abs(x);
  if (a <= 1.0 - eps0) return 1.0;
  if (a >= 1.0) return 0.0;
  // ramp down across the annulus [1-eps0, 1]
  return smooth_transition((1.0 - a) / eps0);
}

int dyadic_level(int n) {
  if (n < 1) throw config_error("dyadic_level: n must be positive");
  int j = 0;
  while ((1 << (j + 1)) <= n) ++j;
  return j;  // 2^j <= n < 2^{j+1}
}

FilterBank build_filter_bank(const GridSpec& g, double eps0) {
  if (!(eps0 > 0.0 && eps0 < 0.1)) {
    throw config_error("build_filter_bank: eps0 must lie in (0, 1/10)");
  }
  if (g.n < 2) throw config_error("build_filter_bank: need n >= 2");
  FilterBank bank;
  bank.grid = g;
  bank.eps0 = eps0;
  const int jn = dyadic_level(g.n);
  bank.levels = jn + 2;
  bank.rho = static_cast<double>(g.n) / static_cast<double>(1 << jn);

  const double rho0 = (3.0 - 2.0 * eps0) / 2.0;
  const double scale = rho0 / bank.rho;
  const int m = g.points();

  // A_j(k) = phi^0_rho(2^{-j} k); weights by telescoping A_j - A_{j-1},
  // which makes the partition sum collapse exactly to A_{top}.
  auto dilated = [&](int j, int k) {
    return lp_bump(scale * std::ldexp(static_cast<double>(k), -j), eps0);
  };

  bank.weights.assign(bank.levels, std::vector<double>(m, 0.0));
  for (int k = -g.n; k < g.n; ++k) {
    double prev = dilated(0, k);
    bank.weights[0][k + g.n] = prev;
    for (int j = 1; j <= jn + 1; ++j) {
      const double cur = dilated(j, k);
      bank.weights[j][k + g.n] = cur - prev;
      prev = cur;
    }
  }
  return bank;
}

}  // namespace besovrates
