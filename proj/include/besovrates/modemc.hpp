#pragma once

#include <cstdint>
#include <vector>

#include "besovrates/grid.hpp"

namespace besovrates {

// =====================================================================
// Spectral Monte Carlo for the coupled two-level linear scheme, one
// coarse mode at a time. Only the 2R modes that alias onto the target
// coarse mode (R = N/n fine modes plus the coarse mode itself) carry
// any signal, and within one coarse window the R^2 fine steps can be
// integrated out in closed form, so a path costs O(R * K) Gaussian
// draws instead of a full grid solve. The sampled law of the error
// functional matches the full scheme's law exactly.
// =====================================================================

struct ModeMcEstimate {
  StepCount coarse_steps = 0;
  double mean = 0.0;       // estimate of E |error|^2
  double std_error = 0.0;  // standard error of the mean
};

struct ModeMcResult {
  std::int64_t paths = 0;
  std::vector<ModeMcEstimate> estimates;  // one per requested checkpoint
};

/// Estimates E |<delta u^N(t) - u^n(t), delta e_ell>_n|^2 at each
/// checkpoint (given in coarse steps, ascending) over `paths` paths.
/// Deterministic in (base_seed, paths, checkpoints); worker count only
/// changes the wall time.
ModeMcResult sample_coupled_mode_variance(
    const GridSpec& coarse, const GridSpec& fine, int ell,
    const std::vector<StepCount>& checkpoints, std::uint64_t base_seed,
    std::int64_t paths, int workers);

}  // namespace besovrates
