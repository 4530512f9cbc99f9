#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "besovrates/errors.hpp"

namespace besovrates {

using StepCount = std::int64_t;

// =====================================================================
// Grids.
//
// Space: Pi_n = {0, 1/2n, ..., (2n-1)/2n}, 2n points, periodic.
// Time:  Lambda_n = {0, h, 2h, ...} with h = c (2n)^{-2}, c in (0, 1/8].
// Times are carried as integer step counts throughout; (2n)^2 / c must
// be an integer so that t = 1 lies on the time grid exactly.
// =====================================================================

struct GridSpec {
  int n = 0;                      // half the number of spatial points
  double c = 0.125;               // time step ratio, h = c (2n)^{-2}
  std::int64_t steps_per_unit = 0;  // 1/h = (2n)^2 / c

  int points() const { return 2 * n; }
  double dx() const { return 1.0 / (2 * n); }
  double h() const { return 1.0 / static_cast<double>(steps_per_unit); }
  double point(int i) const { return static_cast<double>(i) / (2 * n); }
  double time_of(StepCount k) const {
    return static_cast<double>(k) / static_cast<double>(steps_per_unit);
  }

  bool operator==(const GridSpec&) const = default;
};

inline GridSpec make_grid(int n, double c = 0.125) {
  if (n < 1) throw config_error("grid: n must be >= 1");
  if (!(c > 0.0) || c > 0.125)
    throw config_error("grid: c must lie in (0, 1/8]");
  const double raw = 4.0 * static_cast<double>(n) * n / c;
  const double rounded = std::nearbyint(raw);
  if (std::abs(raw - rounded) > 1e-6 || rounded > 9.0e18)
    throw config_error("grid: (2n)^2 / c must be an integer step count");
  GridSpec g;
  g.n = n;
  g.c = c;
  g.steps_per_unit = static_cast<std::int64_t>(rounded);
  return g;
}

/// Real-valued function on Pi_n, stored by grid index.
struct GridFunction {
  GridSpec grid;
  std::vector<double> v;
};

inline GridFunction make_function(const GridSpec& g) {
  return GridFunction{g, std::vector<double>(g.points(), 0.0)};
}

/// Complex-valued function on Pi_n (restrictions of trig polynomials
/// are complex in general).
struct ComplexGridFunction {
  GridSpec grid;
  std::vector<std::complex<double>> v;
};

inline double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_imag(const ComplexGridFunction& f) {
  double m = 0.0;
  for (const auto& x : f.v) m = std::max(m, std::abs(x.imag()));
  return m;
}

inline GridFunction real_part(const ComplexGridFunction& f) {
  GridFunction out{f.grid, std::vector<double>(f.v.size())};
  for (std::size_t i = 0; i < f.v.size(); ++i) out.v[i] = f.v[i].real();
  return out;
}

/// Samples psi(x) = sin(2 pi x) on the grid, the default initial datum.
inline GridFunction sample_sine(const GridSpec& g) {
  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); ++i)
    f.v[i] = std::sin(2.0 * M_PI * g.point(i));
  return f;
}

/// Exact restriction Pi_N -> Pi_n for n | N: coarse points are a subset
/// of fine points, so this is plain subsampling.
inline GridFunction restrict_pointwise(const GridFunction& fine,
                                       const GridSpec& coarse) {
  if (fine.grid.n % coarse.n != 0)
    throw config_error("restrict_pointwise: coarse n must divide fine n");
  const int stride = fine.grid.n / coarse.n;
  GridFunction out = make_function(coarse);
  for (int i = 0; i < coarse.points(); ++i) out.v[i] = fine.v[i * stride];
  return out;
}

}  // namespace besovrates
