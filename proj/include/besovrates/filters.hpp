#pragma once

#include <vector>

#include "besovrates/grid.hpp"

namespace besovrates {

// =====================================================================
// Discrete Littlewood-Paley filters.
//
// phi^0 is a smooth even bump, identically 1 on B_{1-eps0} and
// supported in B_1, scaled by rho_0 = (3 - 2 eps0)/2:
//   phi^0_rho(x) = phi^0((rho_0 / rho) x),
//   phi^j_rho(x) = phi^0_rho(2^{-j} x) - phi^0_rho(2^{-j+1} x), j >= 1.
// With J_n = floor(log2 n) and rho_n = n 2^{-J_n} in [1, 2), the
// weights phi^j_{rho_n}(k), j = 0..J_n+1, sum to exactly 1 for every
// grid frequency k in {-n..n-1}.
// =====================================================================

/// C-infinity transition based on exp(-1/s): 0 at u <= 0, 1 at u >= 1.
double smooth_transition(double u);

/// The mother bump phi^0 at scale 1.
double lp_bump(double x, double eps0);

struct FilterBank {
  GridSpec grid;
  int levels = 0;     // J_n + 2 blocks, indices 0..J_n+1
  double rho = 1.0;   // rho_n
  double eps0 = 0.05;
  // weights[j][k + n] = phi^j_{rho_n}(k)
  std::vector<std::vector<double>> weights;

  double weight(int j, int k) const { return weights[j][k + grid.n]; }
  int top_level() const { return levels - 1; }  // J_n + 1
};

int dyadic_level(int n);  // J_n = floor(log2 n), via integer arithmetic

FilterBank build_filter_bank(const GridSpec& g, double eps0 = 0.05);

}  // namespace besovrates
