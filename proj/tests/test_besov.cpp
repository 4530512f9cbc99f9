#include <doctest.h>

#include <cmath>
#include <vector>

#include "besovrates/besov.hpp"
#include "besovrates/filters.hpp"
#include "besovrates/oracle.hpp"
#include "oracle_dft.hpp"

using namespace besovrates;

namespace {

GridFunction wiggle(const GridSpec& g, double phase) {
  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); ++i)
    f.v[i] = std::sin(phase + 0.9 * i) + 0.3 * std::cos(2.3 * i + phase * phase);
  return f;
}

}  // namespace

TEST_CASE("dyadic level is floor(log2 n)") {
  CHECK(dyadic_level(1) == 0);
  CHECK(dyadic_level(4) == 2);
  CHECK(dyadic_level(8) == 3);
  CHECK(dyadic_level(9) == 3);
  CHECK(dyadic_level(12) == 3);
  CHECK(dyadic_level(16) == 4);
  CHECK(dyadic_level(255) == 7);
  CHECK(dyadic_level(256) == 8);
}

TEST_CASE("filter bank shape: levels and rho") {
  const FilterBank b8 = build_filter_bank(make_grid(8));
  CHECK(b8.levels == 5);  // J_8 + 2
  CHECK(b8.rho == 1.0);
  const FilterBank b12 = build_filter_bank(make_grid(12, 0.125));
  CHECK(b12.levels == 5);
  CHECK(b12.rho == 1.5);
}

TEST_CASE("a pure mode deep inside a dyadic shell fills one block") {
  // k = 5 at n = 8: 2^{-3} * 5 * rho0 = 0.906 < 0.95, 2^{-2} * 5 * rho0 > 1,
  // so the mode belongs to block 3 with weight exactly 1
  const GridSpec g = make_grid(8);
  const FilterBank bank = build_filter_bank(g);
  CHECK(bank.weight(3, 5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bank.weight(2, 5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(bank.weight(4, 5) == doctest::Approx(0.0).epsilon(1e-15));

  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); ++i)
    f.v[i] = std::cos(2.0 * M_PI * 5.0 * g.point(i));
  const std::vector<GridFunction> blocks = lp_decompose(f, bank);
  for (int j = 0; j < bank.levels; ++j) {
    for (int i = 0; i < g.points(); ++i) {
      const double want = (j == 3) ? f.v[i] : 0.0;
      CHECK(blocks[j].v[i] == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("lp_norm on a hand vector") {
  GridSpec g = make_grid(2);
  GridFunction f = make_function(g);
  f.v = {3.0, -4.0, 0.0, 1.0};
  CHECK(lp_norm(f, Exponent::finite(1.0)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(lp_norm(f, Exponent::finite(2.0)) ==
        doctest::Approx(std::sqrt(6.5)).epsilon(1e-15));
  CHECK(lp_norm(f, Exponent::infinity()) == 4.0);
  CHECK_THROWS_AS(Exponent::finite(0.5), config_error);
}

TEST_CASE("normalized L1 of a unit spike is exactly 1") {
  for (int n : {2, 8, 32}) {
    const GridSpec g = make_grid(n);
    GridFunction f = make_function(g);
    f.v[0] = static_cast<double>(2 * n);
    CHECK(lp_norm(f, Exponent::finite(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("holder norm on a hand vector") {
  // f = (0,1,0,1) on Pi_2, alpha = 1/2: sup = 1, adjacent pairs at
  // distance 1/4 give |1 - 0| / (1/4)^{1/2} = 2, total 3
  GridSpec g = make_grid(2);
  GridFunction f = make_function(g);
  f.v = {0.0, 1.0, 0.0, 1.0};
  CHECK(holder_norm(f, 0.5) == doctest::Approx(3.0).epsilon(1e-14));
  // constants have zero seminorm
  GridFunction cst = make_function(g);
  cst.v = {2.0, 2.0, 2.0, 2.0};
  CHECK(holder_norm(cst, 0.3) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("besov norm of a constant is its magnitude") {
  const GridSpec g = make_grid(16);
  GridFunction f = make_function(g);
  for (double& x : f.v) x = -5.0;
  for (double alpha : {-0.45, 0.0, 0.7})
    CHECK(besov_norm(f, alpha, Exponent::infinity(), Exponent::infinity()) ==
          doctest::Approx(5.0).epsilon(1e-13));
}

TEST_CASE("paraproducts resum to the pointwise product") {
  const GridSpec g = make_grid(8);
  const GridFunction f = wiggle(g, 0.4);
  const GridFunction gg = wiggle(g, 1.7);
  const FilterBank bank = build_filter_bank(g);
  const Paraproducts split = paraproducts(f, gg, bank);
  for (int i = 0; i < g.points(); ++i) {
    const double sum =
        split.lo_hi.v[i] + split.resonant.v[i] + split.hi_lo.v[i];
    CHECK(sum == doctest::Approx(f.v[i] * gg.v[i]).epsilon(1e-12));
  }
}

TEST_CASE("lower paraproduct matches the brute-force sum") {
  const GridSpec g = make_grid(8);
  const GridFunction f = wiggle(g, 2.1);
  const GridFunction gg = wiggle(g, -0.8);
  const FilterBank bank = build_filter_bank(g);
  const GridFunction fast = para_lower(f, gg, bank);
  const GridFunction slow = testref::slow_para_lower(f, gg, bank);
  for (int i = 0; i < g.points(); ++i)
    CHECK(fast.v[i] == doctest::Approx(slow.v[i]).epsilon(1e-10));
}

TEST_CASE("kolmogorov bound matches direct evaluation at moderate q") {
  const GridSpec g = make_grid(16);
  const FilterBank bank = build_filter_bank(g);
  std::vector<double> variances(g.points(), 0.0);
  variances[3 + g.n] = 1.0;
  variances[-5 + g.n] = 0.25;
  variances[12 + g.n] = 1e-3;
  const double fast = kolmogorov_bound(variances, -0.4, 4.0, bank);
  const double slow = testref::slow_kolmogorov(variances, -0.4, 4.0, bank);
  CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
}

TEST_CASE("kolmogorov bound survives huge q via log-space evaluation") {
  const GridSpec g = make_grid(16);
  const FilterBank bank = build_filter_bank(g);
  std::vector<double> variances(g.points(), 1e-8);
  const double b = kolmogorov_bound(variances, -0.45, 4096.0, bank);
  CHECK(std::isfinite(b));
  CHECK(b > 0.0);
}
