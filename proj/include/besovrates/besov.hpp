#pragma once

#include <vector>

#include "besovrates/filters.hpp"
#include "besovrates/grid.hpp"

namespace besovrates {

// =====================================================================
// Discrete Besov norms on the periodic grid:
//   ||f||_{B^alpha_{p,q}} = || ( 2^{alpha j} ||f^{[j],n}||_{L^p} )_j ||_{l^q}
// with blocks f^{[j],n} cut out by the FilterBank, j = 0..J_n+1.
// L^p uses the normalized counting measure (mass 1/2n per point).
// =====================================================================

/// An integrability exponent in [1, infinity].
struct Exponent {
  double value = 2.0;
  bool is_inf = false;

  static Exponent infinity() { return Exponent{0.0, true}; }
  static Exponent finite(double v);
};

double lp_norm(const GridFunction& f, Exponent p);

/// The j-th Littlewood-Paley block of f on its own grid.
GridFunction lp_block(const GridFunction& f, int j, const FilterBank& bank);

/// All blocks at once (one forward transform, levels inverse transforms).
std::vector<GridFunction> lp_decompose(const GridFunction& f,
                                       const FilterBank& bank);

struct BesovParams {
  double alpha = 0.0;
  Exponent p = Exponent::infinity();
  Exponent q = Exponent::infinity();
};

double besov_norm(const GridFunction& f, double alpha, Exponent p, Exponent q,
                  const FilterBank& bank);
double besov_norm(const GridFunction& f, const BesovParams& params,
                  const FilterBank& bank);

/// Convenience: builds the bank for f's grid internally.
double besov_norm(const GridFunction& f, double alpha, Exponent p, Exponent q);

/// Discrete Holder norm sup|f| + [f]_{C^alpha}, the seminorm taken over
/// all pairs with the periodic distance. alpha in (0,1).
double holder_norm(const GridFunction& f, double alpha);

// Paraproduct split of the pointwise product: lo_hi carries low
// frequencies of g against high blocks of f, hi_lo the reverse, and
// resonant the near-diagonal pairs; their sum is f*g exactly.
struct Paraproducts {
  GridFunction lo_hi, resonant, hi_lo;
};
Paraproducts paraproducts(const GridFunction& f, const GridFunction& g,
                          const FilterBank& bank);

GridFunction para_lower(const GridFunction& f, const GridFunction& g,
                        const FilterBank& bank);
GridFunction para_diagonal(const GridFunction& f, const GridFunction& g,
                           const FilterBank& bank);
GridFunction para_upper(const GridFunction& f, const GridFunction& g,
                        const FilterBank& bank);

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);

}  // namespace besovrates
