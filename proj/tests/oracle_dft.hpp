#pragma once

// Slow reference implementations used only by the tests: plain O(L^2)
// transforms and brute-force versions of the toolkit operations. They
// share no code with the library, so agreement is meaningful.

#include <cmath>
#include <complex>
#include <vector>

#include "besovrates/besov.hpp"
#include "besovrates/filters.hpp"
#include "besovrates/grid.hpp"

namespace testref {

inline std::vector<std::complex<double>> slow_forward(
    const besovrates::GridFunction& f) {
  const int L = f.grid.points();
  const int n = f.grid.n;
  std::vector<std::complex<double>> coef(static_cast<std::size_t>(L));
  for (int k = -n; k < n; ++k) {
    std::complex<double> s = 0.0;
    for (int i = 0; i < L; ++i) {
      const double a = -2.0 * M_PI * k * i / static_cast<double>(L);
      s += f.v[static_cast<std::size_t>(i)] *
           std::complex<double>(std::cos(a), std::sin(a));
    }
    coef[static_cast<std::size_t>(k + n)] = s / static_cast<double>(L);
  }
  return coef;
}

// Littlewood-Paley block via the slow transform: sum_k w_j(k) fhat_k e_k(x).
inline besovrates::GridFunction slow_block(const besovrates::GridFunction& f,
                                           int j,
                                           const besovrates::FilterBank& bank) {
  const int L = f.grid.points();
  const int n = f.grid.n;
  const std::vector<std::complex<double>> coef = slow_forward(f);
  besovrates::GridFunction out = besovrates::make_function(f.grid);
  for (int i = 0; i < L; ++i) {
    std::complex<double> s = 0.0;
    for (int k = -n; k < n; ++k) {
      const double a = 2.0 * M_PI * k * i / static_cast<double>(L);
      s += bank.weight(j, k) * coef[static_cast<std::size_t>(k + n)] *
           std::complex<double>(std::cos(a), std::sin(a));
    }
    out.v[static_cast<std::size_t>(i)] = s.real();
  }
  return out;
}

// Brute-force lower paraproduct pi_<(f, g) = sum_{k >= 2} f^{[k]} g^{[<=k-2]}.
inline besovrates::GridFunction slow_para_lower(
    const besovrates::GridFunction& f, const besovrates::GridFunction& g,
    const besovrates::FilterBank& bank) {
  besovrates::GridFunction out = besovrates::make_function(f.grid);
  for (int k = 2; k < bank.levels; ++k) {
    const besovrates::GridFunction fk = slow_block(f, k, bank);
    besovrates::GridFunction glow = besovrates::make_function(g.grid);
    for (int l = 0; l <= k - 2; ++l) {
      const besovrates::GridFunction gl = slow_block(g, l, bank);
      for (std::size_t i = 0; i < glow.v.size(); ++i) glow.v[i] += gl.v[i];
    }
    for (std::size_t i = 0; i < out.v.size(); ++i)
      out.v[i] += fk.v[i] * glow.v[i];
  }
  return out;
}

// Direct evaluation of the Besov bound kernel at moderate q, no
// log-space tricks (long double keeps the powers in range).
inline double slow_kolmogorov(const std::vector<double>& variances,
                              double alpha, double q,
                              const besovrates::FilterBank& bank) {
  const int n = bank.grid.n;
  long double acc = 0.0L;
  for (int j = 0; j < bank.levels; ++j) {
    long double s = 0.0L;
    for (int k = -n; k < n; ++k) {
      const long double w = bank.weight(j, k);
      s += w * w * static_cast<long double>(variances[static_cast<std::size_t>(k + n)]);
    }
    const long double weighted = std::pow(2.0L, 2.0L * alpha * j) * s;
    acc += std::pow(2.0L, static_cast<long double>(j)) *
           std::pow(weighted, static_cast<long double>(q) / 2.0L);
  }
  return static_cast<double>(std::pow(acc, 1.0L / static_cast<long double>(q)));
}

}  // namespace testref
