#include <doctest.h>

#include <cmath>
#include <complex>

#include "besovrates/grid.hpp"
#include "besovrates/spectral.hpp"
#include "oracle_dft.hpp"

using namespace besovrates;

namespace {

GridFunction sample_cos(const GridSpec& g, int j) {
  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); ++i)
    f.v[i] = std::cos(2.0 * M_PI * j * g.point(i));
  return f;
}

}  // namespace

TEST_CASE("grid construction enforces the step-count contract") {
  const GridSpec g = make_grid(16);
  CHECK(g.points() == 32);
  CHECK(g.steps_per_unit == 8192);  // (2*16)^2 / (1/8)
  CHECK(g.h() == doctest::Approx(0.125 / 1024.0).epsilon(1e-15));
  CHECK_THROWS_AS(make_grid(0), config_error);
  CHECK_THROWS_AS(make_grid(4, 0.2), config_error);   // c > 1/8
  CHECK_THROWS_AS(make_grid(4, -0.1), config_error);
  // (2n)^2 / c must be integral: n = 3, c = 0.11 gives 327.27...
  CHECK_THROWS_AS(make_grid(3, 0.11), config_error);
  // but c = 0.09 divides (2*3)^2 = 36 exactly (400 steps)
  CHECK(make_grid(3, 0.09).steps_per_unit == 400);
}

TEST_CASE("laplacian eigenvalues: closed form and stencil agree") {
  // lambda^n_j = -16 n^2 sin^2(j pi / 2n); hand value at n = 2, j = 1
  CHECK(eigenvalue(2, 1) == doctest::Approx(-32.0).epsilon(1e-14));
  CHECK(eigenvalue(5, 0) == 0.0);
  // top mode j = n: sin^2(pi/2) = 1
  CHECK(eigenvalue(4, 4) == doctest::Approx(-256.0).epsilon(1e-14));

  // the stencil acting on a sampled cosine reproduces the multiplier
  const GridSpec g = make_grid(8);
  for (int j : {1, 3, 7}) {
    const GridFunction f = sample_cos(g, j);
    const GridFunction lap = discrete_laplacian(f);
    const double lambda = eigenvalue(g.n, j);
    for (int i = 0; i < g.points(); ++i)
      CHECK(lap.v[i] == doctest::Approx(lambda * f.v[i]).epsilon(1e-9));
  }
}

TEST_CASE("laplacian on the two-point grid, exact") {
  // n = 1: Delta f(x) = 4 (f(x+1/2) - 2 f(x) + f(x-1/2)), periodic
  GridSpec g = make_grid(1);
  GridFunction f = make_function(g);
  f.v = {1.0, 0.0};
  const GridFunction lap = discrete_laplacian(f);
  CHECK(lap.v[0] == -8.0);
  CHECK(lap.v[1] == 8.0);
}

TEST_CASE("gamma ratio stays in [4/pi^2, 1]") {
  for (int n : {1, 2, 8, 64, 512}) {
    CHECK(gamma_ratio(n, 0) == 1.0);
    for (int j = 1; j <= n; ++j) {
      const double gam = gamma_ratio(n, j);
      CHECK(gam >= 4.0 / (M_PI * M_PI) - 1e-14);
      CHECK(gam <= 1.0 + 1e-14);
    }
  }
  // gamma is lambda^n_j / (-4 pi^2 j^2), spot check
  CHECK(gamma_ratio(2, 1) ==
        doctest::Approx(-32.0 / (-4.0 * M_PI * M_PI)).epsilon(1e-14));
}

TEST_CASE("heat step multiplier: hand value and stability band") {
  const GridSpec g2 = make_grid(2);
  // 1 - 4c sin^2(pi/4) = 1 - 0.5 * 0.5 = 0.75 exactly
  CHECK(heat_step_multiplier(g2, 1) == 0.75);
  CHECK(heat_step_multiplier(g2, 0) == 1.0);
  for (int n : {1, 4, 16, 128}) {
    const GridSpec g = make_grid(n);
    for (int j = -n; j < n; ++j) {
      const double b = heat_step_multiplier(g, j);
      CHECK(b >= 0.5 - 1e-14);  // c = 1/8 keeps the scheme monotone
      CHECK(b <= 1.0 + 1e-14);
    }
  }
}

TEST_CASE("forward transform matches the slow DFT") {
  const GridSpec g = make_grid(8);
  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); ++i)
    f.v[i] = std::sin(0.7 + 1.3 * i) + 0.25 * std::cos(2.9 * i * i);
  const Spectrum s = forward_transform(f);
  const auto slow = testref::slow_forward(f);
  for (int k = -g.n; k < g.n; ++k)
    CHECK(std::abs(s.mode(k) - slow[k + g.n]) < 1e-12);
}

TEST_CASE("extend_iota is the forward transform and inverts cleanly") {
  const GridSpec g = make_grid(4);
  GridFunction f = make_function(g);
  f.v = {0.3, -1.2, 0.0, 2.5, 0.7, -0.4, 1.1, 0.2};
  const Spectrum s = extend_iota(f);
  const Spectrum ft = forward_transform(f);
  for (int k = -g.n; k < g.n; ++k) CHECK(s.mode(k) == ft.mode(k));
  const GridFunction back = inverse_transform_real(s);
  for (int i = 0; i < g.points(); ++i)
    CHECK(back.v[i] == doctest::Approx(f.v[i]).epsilon(1e-13));
}

TEST_CASE("restrict_delta folds frequencies modulo 2n") {
  // mode 9 on the fine band restricted to n = 8 lands on 9 - 16 = -7
  const GridSpec fine = make_grid(16);
  const GridSpec coarse = make_grid(8);
  Spectrum s = make_spectrum(fine);
  s.mode(9) = std::complex<double>(1.0, 0.0);
  const ComplexGridFunction r = restrict_delta(s, coarse);
  const ComplexGridFunction direct = sample_mode(coarse, 9);
  const ComplexGridFunction folded = sample_mode(coarse, -7);
  for (int i = 0; i < coarse.points(); ++i) {
    CHECK(std::abs(r.v[i] - direct.v[i]) < 1e-12);
    CHECK(std::abs(direct.v[i] - folded.v[i]) < 1e-12);  // aliasing
  }
}

TEST_CASE("restrict_delta onto a finer grid samples the polynomial") {
  const GridSpec coarse = make_grid(2);
  const GridSpec fine = make_grid(4);
  Spectrum s = make_spectrum(coarse);
  s.mode(1) = std::complex<double>(0.0, 1.0);
  const ComplexGridFunction r = restrict_delta(s, fine);
  for (int i = 0; i < fine.points(); ++i) {
    const double x = fine.point(i);
    const std::complex<double> want =
        std::complex<double>(0.0, 1.0) *
        std::exp(std::complex<double>(0.0, 2.0 * M_PI * x));
    CHECK(std::abs(r.v[i] - want) < 1e-12);
  }
}

TEST_CASE("semigroups act as diagonal multipliers") {
  const GridSpec g = make_grid(4);
  Spectrum s = make_spectrum(g);
  s.mode(2) = std::complex<double>(1.5, -0.5);
  s.mode(-3) = std::complex<double>(0.0, 2.0);

  const Spectrum disc = discrete_semigroup_apply(s, 5);
  const double b2 = heat_step_multiplier(g, 2);
  const double b3 = heat_step_multiplier(g, -3);
  CHECK(std::abs(disc.mode(2) - s.mode(2) * std::pow(b2, 5)) < 1e-14);
  CHECK(std::abs(disc.mode(-3) - s.mode(-3) * std::pow(b3, 5)) < 1e-14);
  CHECK(std::abs(disc.mode(0)) == 0.0);

  const double t = 0.01;
  const Spectrum cont = continuous_semigroup_apply(s, t);
  CHECK(std::abs(cont.mode(2) -
                 s.mode(2) * std::exp(-4.0 * M_PI * M_PI * 4.0 * t)) < 1e-14);
  CHECK(std::abs(cont.mode(-3) -
                 s.mode(-3) * std::exp(-4.0 * M_PI * M_PI * 9.0 * t)) < 1e-14);
}

TEST_CASE("Parseval ties spectrum energy to the L2 norm") {
  const GridSpec g = make_grid(8);
  GridFunction f = make_function(g);
  for (int i = 0; i < g.points(); ++i) f.v[i] = std::cos(1.0 + 2.1 * i);
  const double direct = l2_norm(f);
  const double viaspec = std::sqrt(spectrum_energy(forward_transform(f)));
  CHECK(direct == doctest::Approx(viaspec).epsilon(1e-13));
}
