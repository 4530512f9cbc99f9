#pragma once

#include <cstdint>
#include <vector>

#include "besovrates/filters.hpp"
#include "besovrates/grid.hpp"
#include "besovrates/spectral.hpp"

namespace besovrates {

// =====================================================================
// Closed-form second moments for the linear equation (F = 0, zero
// initial data). Everything here is quadrature-free: geometric sums
// for the scheme part, exact lattice sums (with exponentially small
// tails) for the continuum part.
// =====================================================================

/// a_ell^2(t) = E |<u(t) - O^n(t), delta e_ell>_n|^2 for the continuum
/// solution u and the scheme's linear state O^n at grid level n,
/// evaluated at t = steps * h. ell in [-n, n-1].
double exact_mode_variance(const GridSpec& g, int ell, StepCount steps);

/// E |<delta u^N(t) - u^n(t), delta e_ell>_n|^2 for two coupled scheme
/// levels (fine N, coarse n) driven by the same noise; t in coarse steps.
double coupled_mode_variance(const GridSpec& coarse, const GridSpec& fine,
                             int ell, StepCount coarse_steps);

/// Plug mode standard deviations into the Besov Gaussian bound:
///   ( sum_j 2^j ( sum_k (2^{alpha j} phi_j(k) a_k)^2 )^{q/2} )^{1/q},
/// evaluated in log space so large q stays finite.
/// `variances` holds a_k^2 at index k + n.
double kolmogorov_bound(const std::vector<double>& variances, double alpha,
                        double q, const FilterBank& bank);

struct LowerBoundRow {
  int n = 0;
  double mode_variance = 0.0;    // a_1^2(t)
  double scaled_variance = 0.0;  // n^2 a_1^2(t)
};

/// n^2 a_1^2(t) across levels; stays bounded away from 0 and infinity,
/// which is what pins the first-mode error at order 1/n.
std::vector<LowerBoundRow> lower_bound_scan(const std::vector<int>& ns,
                                            double c, std::int64_t t_num,
                                            std::int64_t t_den);

struct KernelProbe {
  double sup_error = 0.0;     // sup over grid of |P^n_k psi - P_t psi|
  double kernel_l2_sq = 0.0;  // squared L^2(R) distance of the kernels
};

/// Deterministic heat-kernel comparison for a trigonometric polynomial
/// psi (modes strictly inside the grid's band).
KernelProbe heat_kernel_probe(const Spectrum& psi, const GridSpec& g,
                              StepCount steps);

}  // namespace besovrates
