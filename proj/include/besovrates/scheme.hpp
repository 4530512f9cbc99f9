#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "besovrates/grid.hpp"
#include "besovrates/noise.hpp"

namespace besovrates {

// =====================================================================
// Explicit finite-difference scheme for
//   du = (Laplacian u + F(u)) dt + dW
// on the periodic grid:
//   u_{k+1} = u_k + h (Lap_n u_k + F(u_k)) + h eta_k,
// with h eta_k = 2n * cells_k. The linear companion O (same equation
// with F = 0, zero initial data) is evolved alongside with the same
// noise for the a priori monitors.
// =====================================================================

/// Reaction polynomial F(v) = sum a_i v^i. An all-zero (or empty)
/// coefficient list marks the linear equation.
struct Polynomial {
  std::vector<double> coeffs;

  bool is_zero() const;
  int degree() const;  // -1 for the zero polynomial
  double operator()(double v) const;
};

Polynomial allen_cahn();  // v - v^3

/// Admissible reactions: zero, or odd degree >= 3 with negative leading
/// coefficient. Throws config_error otherwise.
void validate_reaction(const Polynomial& f);

/// One explicit Euler step with driving term eta (length 2n).
void euler_step(GridFunction& u, const std::vector<double>& eta,
                const Polynomial& f);

/// Running pathwise monitors.
struct AprioriMonitor {
  int mu = 6;
  double linear_sup = 1.0;    // R_n = 1 + max_t ||O_t||_inf
  double deviation_mu = 0.0;  // A_n = max_t ||u_t - O_t||_{L^mu}
};

/// The good event Omega_n: R_n^{nu (nu+mu)} <= n^{2 - 2(nu-1)/mu}.
bool omega_holds(const AprioriMonitor& m, int n, int nu);

/// A_n / R_n^{(nu+mu-1)/mu}, the quantity the pathwise bound scales by.
double monitor_ratio(const AprioriMonitor& m, int nu);

struct AprioriReport {
  double linear_sup = 1.0;   // R_n
  double deviation_mu = 0.0; // A_n
  bool omega = false;
  double ratio = 0.0;
};

/// Times are rationals t = numerator / denominator in whole time units;
/// they must land on every level's step grid.
struct TimePoint {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

StepCount steps_at(const GridSpec& g, const TimePoint& t);

struct SolveOptions {
  TimePoint horizon{1, 1};
  std::vector<TimePoint> checkpoints;  // ascending, each <= horizon
  int mu = 6;
  // > 0: freeze the path once ||u||_{L^mu} >= truncation_factor * n
  double truncation_factor = 0.0;
  // |u| beyond this is treated as blow-up (throws blow_up_error)
  double blow_up_threshold = 1e12;
};

struct PathRecord {
  GridSpec grid;
  std::uint64_t seed = 0;
  std::vector<StepCount> checkpoint_steps;
  std::vector<GridFunction> states;         // u at checkpoints
  std::vector<GridFunction> linear_states;  // O at checkpoints
  AprioriMonitor monitor;
  StepCount frozen_at = -1;  // truncation time tau in steps, -1 if never
};

using InitialData = std::function<GridFunction(const GridSpec&)>;

/// Single-level solve driven by its own cell stream.
PathRecord solve_path(const GridSpec& g, const InitialData& psi,
                      const Polynomial& f, std::uint64_t seed,
                      const SolveOptions& opt);

/// Multi-level solve: every level consumes the same fine-grid noise,
/// coarser levels through cell aggregation. Levels ascend, each a
/// power-of-two refinement of the previous, the last one finest.
std::vector<PathRecord> coupled_solve(const std::vector<GridSpec>& levels,
                                      const InitialData& psi,
                                      const Polynomial& f, std::uint64_t seed,
                                      const SolveOptions& opt);

/// The a priori quantities of a finished path for reaction degree nu.
AprioriReport apriori_report(const PathRecord& rec, int nu);

}  // namespace besovrates
