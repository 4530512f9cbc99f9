#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "besovrates/modemc.hpp"
#include "besovrates/oracle.hpp"
#include "besovrates/rng.hpp"
#include "besovrates/scheme.hpp"
#include "besovrates/spectral.hpp"

using namespace besovrates;

TEST_CASE("exact mode variance: degenerate cases and symmetry") {
  const GridSpec g = make_grid(16);
  CHECK(exact_mode_variance(g, 1, 0) == 0.0);
  CHECK_THROWS_AS(exact_mode_variance(g, 16, 10), config_error);
  CHECK_THROWS_AS(exact_mode_variance(g, -17, 10), config_error);
  // real noise: +-ell carry the same variance
  const StepCount k = g.steps_per_unit / 4;
  CHECK(exact_mode_variance(g, 3, k) ==
        doctest::Approx(exact_mode_variance(g, -3, k)).epsilon(1e-15));
  CHECK(exact_mode_variance(g, 1, k) > 0.0);
}

TEST_CASE("mode zero carries only the alias tail, 1/(96 n^2) at t = 1") {
  // the scheme couples the mass mode perfectly, so what is left is
  // sum_{j != 0} (8 pi^2 (2jn)^2)^{-1} = 1 / (96 n^2) up to e^{-8 pi^2 (2n)^2}
  for (int n : {8, 16, 64}) {
    const GridSpec g = make_grid(n);
    const double v = exact_mode_variance(g, 0, g.steps_per_unit);
    CHECK(v == doctest::Approx(1.0 / (96.0 * n * n)).epsilon(1e-12));
  }
}

TEST_CASE("exact mode variance matches its closed-form asymptote at large n") {
  // at n = 4096, t = 1, mode 1 splits cleanly: the alias tail is
  // sum_{j != 0} (8 pi^2 (1 + 2jn)^2)^{-1} -> 1 / (96 n^2), and the
  // cell-average weight sinc(pi/n) leaves a direct floor
  // 2 (1 - sinc(pi/n)) / (8 pi^2) -> 1 / (24 n^2), four times the tail.
  // total: 5 x the alias sum, with O(1/n) corrections
  const int n = 4096;
  const GridSpec g = make_grid(n);
  const double oracle = exact_mode_variance(g, 1, g.steps_per_unit);
  double tail = 0.0;
  for (int j = 1; j <= 10000; ++j) {
    for (int sign : {+1, -1}) {
      const double m = 1.0 + 2.0 * sign * j * n;
      tail += 1.0 / (8.0 * M_PI * M_PI * m * m);  // t = 1: exp part is 0
    }
  }
  CHECK(oracle > 0.0);
  CHECK(oracle < 1e-6);
  CHECK(std::abs(oracle - 5.0 * tail) / (5.0 * tail) < 0.01);
}

TEST_CASE("first-mode variance scales like n^-2: doubling ratio near 4") {
  const GridSpec g16 = make_grid(16);
  const GridSpec g32 = make_grid(32);
  const double v16 = exact_mode_variance(g16, 1, g16.steps_per_unit / 4);
  const double v32 = exact_mode_variance(g32, 1, g32.steps_per_unit / 4);
  const double ratio = v16 / v32;
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
}

TEST_CASE("lower bound scan stays pinned away from 0 and infinity") {
  const std::vector<LowerBoundRow> rows =
      lower_bound_scan({16, 32, 64}, 0.125, 1, 4);
  REQUIRE(rows.size() == 3);
  double lo = 1e300, hi = 0.0;
  for (const LowerBoundRow& r : rows) {
    CHECK(r.mode_variance > 0.0);
    CHECK(r.scaled_variance > 0.0);
    lo = std::min(lo, r.scaled_variance);
    hi = std::max(hi, r.scaled_variance);
  }
  CHECK(hi / lo < 10.0);
  // variances themselves decay with n
  CHECK(rows[0].mode_variance > rows[1].mode_variance);
  CHECK(rows[1].mode_variance > rows[2].mode_variance);
  CHECK_THROWS_AS(lower_bound_scan({16}, 0.125, 1, 3), config_error);
}

TEST_CASE("kolmogorov bound vanishes on zero variances") {
  const GridSpec g = make_grid(16);
  const FilterBank bank = build_filter_bank(g);
  const std::vector<double> zeros(g.points(), 0.0);
  CHECK(kolmogorov_bound(zeros, -0.4, 64.0, bank) == 0.0);
}

TEST_CASE("heat kernel probe: constant data has zero sup error") {
  const GridSpec g = make_grid(32);
  Spectrum psi = make_spectrum(g);
  psi.mode(0) = 3.0;
  const KernelProbe probe = heat_kernel_probe(psi, g, g.steps_per_unit / 8);
  CHECK(probe.sup_error <= 1e-14);
  CHECK(probe.kernel_l2_sq > 0.0);  // the kernels differ off mode zero
  CHECK(std::isfinite(probe.kernel_l2_sq));
}

TEST_CASE("heat kernel probe: first mode reduces to the multiplier gap") {
  const GridSpec g = make_grid(64);
  const StepCount steps = g.steps_per_unit / 4;
  Spectrum psi = make_spectrum(g);
  psi.mode(1) = 1.0;
  const KernelProbe probe = heat_kernel_probe(psi, g, steps);
  const double b1 = heat_step_multiplier(g, 1);
  const double want = std::abs(std::pow(b1, double(steps)) -
                               std::exp(-4.0 * M_PI * M_PI * 0.25));
  CHECK(probe.sup_error == doctest::Approx(want).epsilon(1e-12));

  Spectrum wide = make_spectrum(make_grid(128));
  wide.mode(100) = 1.0;
  CHECK_THROWS_AS(heat_kernel_probe(wide, g, steps), config_error);
}

TEST_CASE("coupled variance: guards and limit toward the continuum") {
  const GridSpec g16 = make_grid(16);
  const GridSpec g256 = make_grid(256);
  CHECK_THROWS_AS(coupled_mode_variance(g16, g16, 1, 8), coupling_error);
  CHECK_THROWS_AS(coupled_mode_variance(g16, make_grid(24), 1, 8),
                  coupling_error);
  CHECK_THROWS_AS(
      coupled_mode_variance(g16, make_grid(32, 0.0625), 1, 8),
      coupling_error);
  CHECK(coupled_mode_variance(g16, g256, 1, 0) == 0.0);

  // the coupled second moment approaches the scheme-vs-continuum one
  // from below, first order in n/N (measured: -6.4% at N = 16n, halving
  // with every refinement), so the Richardson extrapolation of the
  // coupled formula must land on the independently derived exact one
  const StepCount steps = g16.steps_per_unit;
  const double exact = exact_mode_variance(g16, 1, steps);
  const double c256 = coupled_mode_variance(g16, g256, 1, steps);
  const double c512 = coupled_mode_variance(g16, make_grid(512), 1, steps);
  const double c2048 = coupled_mode_variance(g16, make_grid(2048), 1, steps);
  const double c4096 = coupled_mode_variance(g16, make_grid(4096), 1, steps);
  CHECK(c256 > 0.0);
  CHECK(c256 < exact);
  CHECK(std::abs(c256 - exact) / exact < 0.10);
  CHECK(std::abs(c512 - exact) < std::abs(c256 - exact));
  const double extrapolated = 2.0 * c4096 - c2048;
  CHECK(std::abs(extrapolated - exact) / exact < 1e-4);
}

TEST_CASE("coupled variance agrees with a brute-force coupled simulation") {
  // small pair, short horizon: run full two-level paths and compare the
  // empirical second moment of the mode-1 error functional
  const GridSpec coarse = make_grid(4);
  const GridSpec fine = make_grid(16);
  const StepCount steps = coarse.steps_per_unit / 4;
  const double oracle = coupled_mode_variance(coarse, fine, 1, steps);

  SolveOptions opt;
  opt.horizon = TimePoint{1, 4};
  opt.checkpoints = {TimePoint{1, 4}};
  const int kPaths = 1200;
  double sum = 0.0, sum_sq = 0.0;
  for (int p = 0; p < kPaths; ++p) {
    const std::vector<PathRecord> recs =
        coupled_solve({coarse, fine}, InitialData{}, Polynomial{},
                      path_seed(424242, p), opt);
    const GridFunction diff_fine =
        restrict_pointwise(recs[1].states[0], coarse);
    GridFunction err = recs[0].states[0];
    for (int i = 0; i < coarse.points(); ++i)
      err.v[i] = diff_fine.v[i] - err.v[i];
    const std::complex<double> ehat = forward_transform(err).mode(1);
    const double a = std::norm(ehat);
    sum += a;
    sum_sq += a * a;
  }
  const double mean = sum / kPaths;
  const double sd =
      std::sqrt(std::max(0.0, sum_sq / kPaths - mean * mean));
  const double se = sd / std::sqrt(double(kPaths));
  CHECK(mean > 0.0);
  CHECK(std::abs(mean - oracle) <= 4.0 * se);
}

TEST_CASE("spectral Monte Carlo sampler matches the closed form") {
  const GridSpec coarse = make_grid(16);
  const GridSpec fine = make_grid(256);
  const StepCount steps = coarse.steps_per_unit / 16;
  const double oracle = coupled_mode_variance(coarse, fine, 1, steps);

  const ModeMcResult r = sample_coupled_mode_variance(
      coarse, fine, 1, {steps}, 20260819, 2000, 1);
  REQUIRE(r.estimates.size() == 1);
  CHECK(r.paths == 2000);
  CHECK(r.estimates[0].coarse_steps == steps);
  CHECK(r.estimates[0].std_error > 0.0);
  CHECK(std::abs(r.estimates[0].mean - oracle) <=
        4.0 * r.estimates[0].std_error);

  // deterministic in (seed, paths): a rerun reproduces the estimate
  const ModeMcResult r2 = sample_coupled_mode_variance(
      coarse, fine, 1, {steps}, 20260819, 2000, 1);
  CHECK(r.estimates[0].mean == r2.estimates[0].mean);
}
