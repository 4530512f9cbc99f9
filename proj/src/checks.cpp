#include "besovrates/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include "besovrates/besov.hpp"
#include "besovrates/errors.hpp"
#include "besovrates/filters.hpp"
#include "besovrates/noise.hpp"
#include "besovrates/oracle.hpp"
#include "besovrates/rng.hpp"
#include "besovrates/scheme.hpp"
#include "besovrates/spectral.hpp"

namespace besovrates {

namespace {

// =====================================================================
// Deterministic test fields
// =====================================================================

GridFunction random_field(const GridSpec& g, std::uint64_t key,
                          std::uint64_t draw) {
  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); i += 2) {
    const GaussianPair z = gaussian_pair(key, draw,
                                         static_cast<std::uint32_t>(i / 2),
                                         RngDomain::test_fields);
    f.v[i] = z.z0;
    f.v[i + 1] = z.z1;
  }
  return f;
}

// Real field with spectrum inside {-(m-1), ..., m-1}.
GridFunction random_band_limited(const GridSpec& g, int m, std::uint64_t key,
                                 std::uint64_t draw) {
  Spectrum s = make_spectrum(g);
  {
    const GaussianPair z = gaussian_pair(key, draw, 0, RngDomain::test_fields);
    s.mode(0) = z.z0;
  }
  for (int k = 1; k < m; ++k) {
    const GaussianPair z = gaussian_pair(key, draw,
                                         static_cast<std::uint32_t>(k),
                                         RngDomain::test_fields);
    const std::complex<double> a{0.5 * z.z0, 0.5 * z.z1};
    s.mode(k) = a;
    s.mode(-k) = std::conj(a);
  }
  return inverse_transform_real(s);
}

CheckResult bounded(std::string name, double measured, double threshold) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.threshold = threshold;
  r.pass = measured <= threshold;
  return r;
}

double rel(double diff, double scale) {
  return diff / std::max(1.0, scale);
}

// =====================================================================
// Identity checks
// =====================================================================

CheckResult check_partition_of_unity() {
  double worst = 0.0;
  for (int n : {4, 8, 12, 16, 32, 48, 64, 128, 256}) {
    const FilterBank bank = build_filter_bank(make_grid(n));
    for (int k = -n; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < bank.levels; ++j) s += bank.weight(j, k);
      worst = std::max(worst, std::abs(s - 1.0));
    }
  }
  return bounded("partition-of-unity", worst, 1e-12);
}

CheckResult check_round_trip() {
  double worst = 0.0;
  for (int n : {4, 16, 64, 256}) {
    const GridSpec g = make_grid(n);
    for (std::uint64_t d = 0; d < 8; ++d) {
      const GridFunction f = random_field(g, 0xA11CE001, d);
      const ComplexGridFunction back = inverse_transform(forward_transform(f));
      for (int i = 0; i < g.points(); ++i) {
        worst = std::max(worst, std::abs(back.v[i].real() - f.v[i]));
        worst = std::max(worst, std::abs(back.v[i].imag()));
      }
    }
  }
  return bounded("transform-round-trip", worst, 1e-12);
}

CheckResult check_parseval() {
  double worst = 0.0;
  for (int n : {4, 16, 64, 256}) {
    const GridSpec g = make_grid(n);
    for (std::uint64_t d = 0; d < 8; ++d) {
      const GridFunction f = random_field(g, 0xA11CE002, d);
      const double lhs = spectrum_energy(forward_transform(f));
      const double l2 = l2_norm(f);
      worst = std::max(worst, rel(std::abs(lhs - l2 * l2), l2 * l2));
    }
  }
  return bounded("parseval", worst, 1e-12);
}

CheckResult check_delta_iota() {
  double worst = 0.0;
  for (int n : {4, 16, 64, 256}) {
    const GridSpec g = make_grid(n);
    for (std::uint64_t d = 0; d < 8; ++d) {
      const GridFunction f = random_field(g, 0xA11CE003, d);
      const ComplexGridFunction back = restrict_delta(extend_iota(f), g);
      for (int i = 0; i < g.points(); ++i) {
        worst = std::max(worst, std::abs(back.v[i].real() - f.v[i]));
        worst = std::max(worst, std::abs(back.v[i].imag()));
      }
    }
  }
  return bounded("delta-iota-identity", worst, 1e-12);
}

CheckResult check_aliasing_fold() {
  double worst = 0.0;
  for (int n : {4, 16, 256}) {
    const GridSpec g = make_grid(n);
    for (int j : {n + 1, 2 * n + 3}) {
      const ComplexGridFunction a = sample_mode(g, j);
      const ComplexGridFunction b = sample_mode(g, j - 2 * n);
      for (int i = 0; i < g.points(); ++i)
        worst = std::max(worst, std::abs(a.v[i] - b.v[i]));
    }
  }
  return bounded("aliasing-fold", worst, 1e-12);
}

CheckResult check_lp_reconstruction() {
  double worst = 0.0;
  for (int n : {4, 8, 16, 64, 256}) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    for (std::uint64_t d = 0; d < 6; ++d) {
      const GridFunction f = random_field(g, 0xA11CE004, d);
      const std::vector<GridFunction> blocks = lp_decompose(f, bank);
      for (int i = 0; i < g.points(); ++i) {
        double s = 0.0;
        for (const GridFunction& b : blocks) s += b.v[i];
        worst = std::max(worst, std::abs(s - f.v[i]));
      }
    }
  }
  return bounded("lp-reconstruction", worst, 1e-10);
}

CheckResult check_paraproduct_sum() {
  double worst = 0.0;
  for (int n : {4, 16, 64}) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    for (std::uint64_t d = 0; d < 4; ++d) {
      const GridFunction f = random_field(g, 0xA11CE005, 2 * d);
      const GridFunction h = random_field(g, 0xA11CE005, 2 * d + 1);
      const Paraproducts pp = paraproducts(f, h, bank);
      const GridFunction prod = pointwise_product(f, h);
      for (int i = 0; i < g.points(); ++i) {
        const double s = pp.lo_hi.v[i] + pp.resonant.v[i] + pp.hi_lo.v[i];
        worst = std::max(worst, std::abs(s - prod.v[i]));
      }
    }
  }
  return bounded("paraproduct-sum", worst, 1e-10);
}

CheckResult check_semigroup_property() {
  double worst = 0.0;
  for (int n : {4, 16, 64, 256}) {
    const GridSpec g = make_grid(n);
    const GridFunction f = random_field(g, 0xA11CE006, 0);
    const Spectrum s = forward_transform(f);
    const Spectrum oneshot = discrete_semigroup_apply(s, 20);
    const Spectrum split =
        discrete_semigroup_apply(discrete_semigroup_apply(s, 7), 13);
    for (int k = -n; k < n; ++k)
      worst = std::max(worst, std::abs(oneshot.mode(k) - split.mode(k)));
  }
  return bounded("semigroup-property", worst, 1e-12);
}

CheckResult check_stencil_vs_spectral() {
  double worst = 0.0;
  const Polynomial none{{}};
  for (int n : {4, 16, 64, 256}) {
    const GridSpec g = make_grid(n);
    const std::vector<double> zero_eta(static_cast<std::size_t>(g.points()),
                                       0.0);
    for (std::uint64_t d = 0; d < 4; ++d) {
      const GridFunction f = random_field(g, 0xA11CE007, d);
      GridFunction stepped = f;
      euler_step(stepped, zero_eta, none);
      const GridFunction spectral =
          inverse_transform_real(discrete_semigroup_apply(forward_transform(f), 1));
      for (int i = 0; i < g.points(); ++i) {
        worst = std::max(
            worst, rel(std::abs(stepped.v[i] - spectral.v[i]), max_abs(f)));
      }
    }
  }
  return bounded("stencil-spectral-step", worst, 1e-12);
}

// Discrete Duhamel form: after K steps,
//   u_K = P^K u_0 + h sum_k P^{K-1-k} (F(u_k) + eta_k).
CheckResult check_mild_form() {
  const GridSpec g = make_grid(4);
  const Polynomial f = allen_cahn();
  const StepCount K = 12;

  GridFunction u = sample_sine(g);
  std::vector<Spectrum> forcing;  // F(u_k) + eta_k per step, as spectra
  GridFunction u0 = u;
  for (StepCount k = 0; k < K; ++k) {
    GridFunction force = random_field(g, 0xA11CE008, static_cast<std::uint64_t>(k));
    for (double& x : force.v) x *= 3.0;
    GridFunction total = force;
    for (int i = 0; i < g.points(); ++i) total.v[i] += f(u.v[i]);
    forcing.push_back(forward_transform(total));
    euler_step(u, force.v, f);
  }

  Spectrum mild = discrete_semigroup_apply(forward_transform(u0), K);
  for (StepCount k = 0; k < K; ++k) {
    const Spectrum prop = discrete_semigroup_apply(
        forcing[static_cast<std::size_t>(k)], K - 1 - k);
    for (int j = -g.n; j < g.n; ++j)
      mild.mode(j) += g.h() * prop.mode(j);
  }
  const GridFunction rebuilt = inverse_transform_real(mild);

  double worst = 0.0;
  for (int i = 0; i < g.points(); ++i)
    worst = std::max(worst, rel(std::abs(rebuilt.v[i] - u.v[i]), max_abs(u)));
  return bounded("mild-form", worst, 1e-12);
}

// ||f||_q <= (2m)^{1/p - 1/q} ||f||_p for spectrum inside {-m..m-1};
// the constant is exact, so the worst ratio must not exceed 1.
std::vector<CheckResult> check_bernstein() {
  const int kDraws = 1000;
  double worst_1_inf = 0.0, worst_2_inf = 0.0, worst_1_2 = 0.0;
  const int ns[] = {4, 8, 16, 32};
  for (int d = 0; d < kDraws; ++d) {
    const int n = ns[d % 4];
    const int m = 1 + d % n;
    const GridSpec g = make_grid(n);
    const GridFunction f =
        random_band_limited(g, m, 0xA11CE009, static_cast<std::uint64_t>(d));
    const double l1 = lp_norm(f, Exponent::finite(1.0));
    const double l2 = lp_norm(f, Exponent::finite(2.0));
    const double linf = lp_norm(f, Exponent::infinity());
    if (l1 <= 0.0) continue;
    const double two_m = 2.0 * m;
    worst_1_inf = std::max(worst_1_inf, linf / (two_m * l1));
    worst_2_inf = std::max(worst_2_inf, linf / (std::sqrt(two_m) * l2));
    worst_1_2 = std::max(worst_1_2, l2 / (std::sqrt(two_m) * l1));
  }
  const double tol = 1.0 + 1e-12;
  return {bounded("bernstein-p1-qinf", worst_1_inf, tol),
          bounded("bernstein-p2-qinf", worst_2_inf, tol),
          bounded("bernstein-p1-q2", worst_1_2, tol)};
}

CheckResult check_besov_of_constant() {
  double worst = 0.0;
  for (int n : {4, 16, 64}) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    GridFunction one = make_function(g);
    for (double& x : one.v) x = 1.0;
    for (double alpha : {0.0, -0.4}) {
      const double b = besov_norm(one, alpha, Exponent::infinity(),
                                  Exponent::infinity(), bank);
      worst = std::max(worst, std::abs(b - 1.0));
    }
  }
  return bounded("besov-constant-norm", worst, 1e-12);
}

CheckResult check_kolmogorov_single_mode() {
  const GridSpec g = make_grid(16);
  const FilterBank bank = build_filter_bank(g);
  std::vector<double> variances(static_cast<std::size_t>(2 * g.n), 0.0);
  variances[static_cast<std::size_t>(g.n)] = 1.0;  // mode 0 only
  const double b = kolmogorov_bound(variances, -0.4, 64.0, bank);
  return bounded("kolmogorov-single-mode", std::abs(b - 1.0), 1e-12);
}

CheckResult check_coarsen_composition() {
  const GridSpec fine = make_grid(64);
  const GridSpec mid = make_grid(32);
  const GridSpec coarse = make_grid(16);
  const CellBlock blk = collect_cells(fine, coarse, 0xC0A45E, 0);
  const CellBlock direct = coarsen(blk, coarse);
  const CellBlock staged = coarsen(coarsen(blk, mid), coarse);
  double worst = 0.0;
  for (std::size_t p = 0; p < direct.steps.size(); ++p)
    for (std::size_t i = 0; i < direct.steps[p].size(); ++i)
      worst = std::max(worst,
                       std::abs(direct.steps[p][i] - staged.steps[p][i]));
  return bounded("coarsen-composition", worst, 0.0);
}

CheckResult check_coarsen_mass() {
  const GridSpec fine = make_grid(64);
  const GridSpec coarse = make_grid(16);
  const int ratio = fine.n / coarse.n;
  const CellBlock blk = collect_cells(fine, coarse, 0xC0A45F, 0);
  const CellBlock reduced = coarsen(blk, coarse);
  double worst = 0.0;
  for (int i = 0; i < coarse.points(); ++i) {
    double straight = 0.0;
    for (const auto& step : blk.steps)
      for (int x = 0; x < ratio; ++x)
        straight += step[static_cast<std::size_t>(i * ratio + x)];
    worst = std::max(worst,
                     std::abs(straight - reduced.steps[0][static_cast<std::size_t>(i)]));
  }
  return bounded("coarsen-mass", worst, 1e-15);
}

// The solver must be a pure function of (grid, seed, options), and its
// streaming step must equal the plain euler_step composition exactly.
CheckResult check_solver_determinism() {
  double worst = 0.0;
  for (int n : {4, 16}) {
    const GridSpec g = make_grid(n);
    SolveOptions opt;
    opt.horizon = TimePoint{1, 16};
    opt.checkpoints = {TimePoint{1, 32}, TimePoint{1, 16}};
    const InitialData psi = [](const GridSpec& gg) { return sample_sine(gg); };
    const Polynomial f = allen_cahn();
    const std::uint64_t seed = 0xD37E051;

    const PathRecord a = solve_path(g, psi, f, seed, opt);
    const PathRecord b = solve_path(g, psi, f, seed, opt);
    for (std::size_t k = 0; k < a.states.size(); ++k)
      for (int i = 0; i < g.points(); ++i)
        worst = std::max(worst,
                         std::abs(a.states[k].v[i] - b.states[k].v[i]));

    // manual replay with the public pieces
    GridFunction u = psi(g);
    const StepCount total = steps_at(g, opt.horizon);
    for (StepCount s = 0; s < total; ++s) {
      const GridFunction eta = eta_increment(stream_fine_noise(g, seed, s), g);
      euler_step(u, eta.v, f);
    }
    for (int i = 0; i < g.points(); ++i)
      worst = std::max(worst, std::abs(u.v[i] - a.states.back().v[i]));
  }
  return bounded("solver-determinism", worst, 0.0);
}

CheckResult check_besov_monotonic_in_alpha() {
  double worst = 0.0;
  for (int n : {8, 32}) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    for (std::uint64_t d = 0; d < 8; ++d) {
      const GridFunction f = random_field(g, 0xA11CE00A, d);
      const double lo = besov_norm(f, -0.45, Exponent::infinity(),
                                   Exponent::infinity(), bank);
      const double mid = besov_norm(f, -0.2, Exponent::infinity(),
                                    Exponent::infinity(), bank);
      const double hi = besov_norm(f, 0.0, Exponent::infinity(),
                                   Exponent::infinity(), bank);
      worst = std::max(worst, (lo - mid) / mid);
      worst = std::max(worst, (mid - hi) / hi);
    }
  }
  return bounded("besov-alpha-monotone", worst, 1e-12);
}

// ||f||_{L^p} <= ||f||_{B^0_{p,1}} with constant exactly 1
// (triangle inequality over the reconstruction).
CheckResult check_lp_below_besov01() {
  double worst = 0.0;
  for (int n : {8, 64}) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    for (std::uint64_t d = 0; d < 8; ++d) {
      const GridFunction f = random_field(g, 0xA11CE00B, d);
      for (const Exponent& p : {Exponent::finite(2.0), Exponent::infinity()}) {
        const double lhs = lp_norm(f, p);
        const double rhs = besov_norm(f, 0.0, p, Exponent::finite(1.0), bank);
        worst = std::max(worst, lhs / rhs);
      }
    }
  }
  return bounded("lp-below-besov01", worst, 1.0 + 1e-12);
}

// =====================================================================
// Growth checks: constants measured per n, compared to the baseline
// =====================================================================

const int kGrowthNs[] = {8, 16, 32, 64, 128, 256};
constexpr int kGrowthDraws = 32;

CheckResult growth_ratio(std::string name, const std::vector<double>& consts) {
  double worst = 0.0;
  for (double cv : consts) worst = std::max(worst, cv / consts.front());
  return bounded(std::move(name), worst, 2.0);
}

// B^0_{p,infty} <= N L^p
CheckResult growth_equivalence(const char* name, Exponent p,
                               std::uint64_t key) {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    double c = 0.0;
    for (std::uint64_t d = 0; d < kGrowthDraws; ++d) {
      const GridFunction f = random_field(g, key, d);
      c = std::max(c, besov_norm(f, 0.0, p, Exponent::infinity(), bank) /
                          lp_norm(f, p));
    }
    consts.push_back(c);
  }
  return growth_ratio(name, consts);
}

// B^{alpha - (1/p1 - 1/p2)}_{p2,infty} <= N B^alpha_{p1,infty},
// p1 = 2, p2 = infinity, alpha = 0.4.
CheckResult growth_embedding() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    double c = 0.0;
    for (std::uint64_t d = 0; d < kGrowthDraws; ++d) {
      const GridFunction f = random_field(g, 0x6B0B001, d);
      const double lhs = besov_norm(f, -0.1, Exponent::infinity(),
                                    Exponent::infinity(), bank);
      const double rhs = besov_norm(f, 0.4, Exponent::finite(2.0),
                                    Exponent::infinity(), bank);
      c = std::max(c, lhs / rhs);
    }
    consts.push_back(c);
  }
  return growth_ratio("embedding", consts);
}

// ||fg||_{B^{0.4}} <= N ||f||_{B^{0.4}} ||g||_{B^{0.4}}
CheckResult growth_product() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    double c = 0.0;
    for (std::uint64_t d = 0; d < kGrowthDraws; ++d) {
      const GridFunction f = random_field(g, 0x6B0B002, 2 * d);
      const GridFunction h = random_field(g, 0x6B0B002, 2 * d + 1);
      const double lhs = besov_norm(pointwise_product(f, h), 0.4,
                                    Exponent::infinity(),
                                    Exponent::infinity(), bank);
      const double rhs = besov_norm(f, 0.4, Exponent::infinity(),
                                    Exponent::infinity(), bank) *
                         besov_norm(h, 0.4, Exponent::infinity(),
                                    Exponent::infinity(), bank);
      c = std::max(c, lhs / rhs);
    }
    consts.push_back(c);
  }
  return growth_ratio("product", consts);
}

std::vector<StepCount> dyadic_steps(const GridSpec& g) {
  std::vector<StepCount> steps;
  for (StepCount s = 1; s < g.steps_per_unit; s *= 4) steps.push_back(s);
  steps.push_back(g.steps_per_unit);
  return steps;
}

// ||P^n_t f||_{B^{alpha+1}} <= N t^{-1/2} ||f||_{B^alpha}, alpha = -0.4
CheckResult growth_smoothing() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    const std::vector<StepCount> steps = dyadic_steps(g);
    double c = 0.0;
    for (std::uint64_t d = 0; d < kGrowthDraws; ++d) {
      const GridFunction f = random_field(g, 0x6B0B003, d);
      const Spectrum s = forward_transform(f);
      const double rhs = besov_norm(f, -0.4, Exponent::infinity(),
                                    Exponent::infinity(), bank);
      for (StepCount k : steps) {
        const double t = g.time_of(k);
        const GridFunction pt =
            inverse_transform_real(discrete_semigroup_apply(s, k));
        const double lhs = besov_norm(pt, 0.6, Exponent::infinity(),
                                      Exponent::infinity(), bank);
        c = std::max(c, std::sqrt(t) * lhs / rhs);
      }
    }
    consts.push_back(c);
  }
  return growth_ratio("semigroup-smoothing", consts);
}

// ||P^n_t f - f||_{B^alpha} <= N t^{1/2} ||f||_{B^{alpha+1}}, alpha = -0.4
CheckResult growth_continuity() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    const std::vector<StepCount> steps = dyadic_steps(g);
    double c = 0.0;
    for (std::uint64_t d = 0; d < kGrowthDraws; ++d) {
      const GridFunction f = random_field(g, 0x6B0B004, d);
      const Spectrum s = forward_transform(f);
      const double rhs = besov_norm(f, 0.6, Exponent::infinity(),
                                    Exponent::infinity(), bank);
      for (StepCount k : steps) {
        const double t = g.time_of(k);
        Spectrum diff = discrete_semigroup_apply(s, k);
        for (int j = -g.n; j < g.n; ++j) diff.mode(j) -= s.mode(j);
        const double lhs =
            besov_norm(inverse_transform_real(diff), -0.4,
                       Exponent::infinity(), Exponent::infinity(), bank);
        c = std::max(c, lhs / (std::sqrt(t) * rhs));
      }
    }
    consts.push_back(c);
  }
  return growth_ratio("semigroup-continuity", consts);
}

// Schauder estimate for the inhomogeneous scheme with constant forcing:
// f_1 = h sum_k P^{K-1-k} g obeys ||f_1||_{B^{alpha+2}} <= N ||g||_{B^alpha}.
CheckResult growth_schauder() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const FilterBank bank = build_filter_bank(g);
    const StepCount K = g.steps_per_unit;
    double c = 0.0;
    for (std::uint64_t d = 0; d < kGrowthDraws; ++d) {
      const GridFunction force = random_field(g, 0x6B0B005, d);
      const Spectrum fs = forward_transform(force);
      Spectrum sol = make_spectrum(g);
      for (int j = -g.n; j < g.n; ++j) {
        const double b = heat_step_multiplier(g, j);
        const double geo = (b == 1.0)
                               ? static_cast<double>(K)
                               : (1.0 - std::pow(b, static_cast<double>(K))) /
                                     (1.0 - b);
        sol.mode(j) = g.h() * geo * fs.mode(j);
      }
      const double lhs =
          besov_norm(inverse_transform_real(sol), 1.6, Exponent::infinity(),
                     Exponent::infinity(), bank);
      const double rhs = besov_norm(force, -0.4, Exponent::infinity(),
                                    Exponent::infinity(), bank);
      c = std::max(c, lhs / rhs);
    }
    consts.push_back(c);
  }
  return growth_ratio("schauder", consts);
}

// Truncated Weierstrass sample: sum of 2^{-k/2} cos(2 pi 2^k x) over
// 2^k <= limit; a uniformly rough initial condition with an
// n-independent C^{1/2} norm.
Spectrum weierstrass_spectrum(const GridSpec& g, int limit) {
  Spectrum s = make_spectrum(g);
  for (int k = 0; (1 << k) <= limit; ++k) {
    const double amp = 0.5 * std::pow(2.0, -0.5 * k);
    s.mode(1 << k) += amp;
    s.mode(-(1 << k)) += amp;
  }
  return s;
}

double weierstrass_holder_half(int limit) {
  // oversampled evaluation, then the full Hoelder quotient on the grid
  const GridSpec fine = make_grid(512);
  GridFunction f = make_function(fine);
  for (int i = 0; i < fine.points(); ++i) {
    double v = 0.0;
    for (int k = 0; (1 << k) <= limit; ++k)
      v += std::pow(2.0, -0.5 * k) *
           std::cos(2.0 * M_PI * (1 << k) * fine.point(i));
    f.v[i] = v;
  }
  return holder_norm(f, 0.5);
}

// sup-point error of P^n_t psi vs P_t psi <= N n^{-1/2} ||psi||_{C^{1/2}}
CheckResult growth_det_rate() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    const Spectrum psi = weierstrass_spectrum(g, n / 2);
    const double hnorm = weierstrass_holder_half(n / 2);
    double worst = 0.0;
    for (int i = 1; i <= 16; ++i) {
      const StepCount steps = g.steps_per_unit * i / 16;
      worst = std::max(worst, heat_kernel_probe(psi, g, steps).sup_error);
    }
    consts.push_back(std::sqrt(static_cast<double>(n)) * worst / hnorm);
  }
  return growth_ratio("det-rate", consts);
}

// squared kernel distance <= N n^{-2} t^{-3/2} (beta = 2)
CheckResult growth_kernel_distance() {
  std::vector<double> consts;
  for (int n : kGrowthNs) {
    const GridSpec g = make_grid(n);
    Spectrum psi = make_spectrum(g);
    psi.mode(1) = 1.0;
    double c = 0.0;
    const StepCount probes[] = {1, g.steps_per_unit / 16,
                                g.steps_per_unit / 4, g.steps_per_unit};
    for (StepCount steps : probes) {
      const double t = g.time_of(steps);
      const double d2 = heat_kernel_probe(psi, g, steps).kernel_l2_sq;
      c = std::max(c, d2 * double(n) * double(n) * std::pow(t, 1.5));
    }
    consts.push_back(c);
  }
  return growth_ratio("kernel-distance", consts);
}

}  // namespace

// =====================================================================
// Public entry points
// =====================================================================

std::vector<CheckResult> identity_checks() {
  std::vector<CheckResult> out;
  out.push_back(check_partition_of_unity());
  out.push_back(check_round_trip());
  out.push_back(check_parseval());
  out.push_back(check_delta_iota());
  out.push_back(check_aliasing_fold());
  out.push_back(check_lp_reconstruction());
  out.push_back(check_paraproduct_sum());
  out.push_back(check_semigroup_property());
  out.push_back(check_stencil_vs_spectral());
  out.push_back(check_mild_form());
  for (CheckResult& r : check_bernstein()) out.push_back(std::move(r));
  out.push_back(check_besov_of_constant());
  out.push_back(check_kolmogorov_single_mode());
  out.push_back(check_coarsen_composition());
  out.push_back(check_coarsen_mass());
  out.push_back(check_solver_determinism());
  out.push_back(check_besov_monotonic_in_alpha());
  out.push_back(check_lp_below_besov01());
  return out;
}

std::vector<CheckResult> growth_checks() {
  std::vector<CheckResult> out;
  out.push_back(growth_equivalence("equivalence-sup", Exponent::infinity(),
                                   0x6B0B000));
  out.push_back(growth_equivalence("equivalence-l2", Exponent::finite(2.0),
                                   0x6B0B006));
  out.push_back(growth_embedding());
  out.push_back(growth_product());
  out.push_back(growth_smoothing());
  out.push_back(growth_continuity());
  out.push_back(growth_schauder());
  out.push_back(growth_det_rate());
  out.push_back(growth_kernel_distance());
  return out;
}

std::vector<CheckResult> all_checks() {
  std::vector<CheckResult> out = identity_checks();
  std::vector<CheckResult> g = growth_checks();
  out.insert(out.end(), std::make_move_iterator(g.begin()),
             std::make_move_iterator(g.end()));
  return out;
}

}  // namespace besovrates
