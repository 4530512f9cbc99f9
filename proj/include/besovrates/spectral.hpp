#pragma once

#include <complex>
#include <vector>

#include "besovrates/grid.hpp"

namespace besovrates {

// =====================================================================
// Fourier analysis on Pi_n.
//
// Basis: e_j(x) = exp(2 pi i j x). The normalized inner product
// <f,g>_n = (2n)^{-1} sum_x f(x) conj(g(x)) makes {delta e_j}_{j=-n}^{n-1}
// an orthonormal basis of L^2(Pi_n; C); coefficients alias with period
// 2n: delta e_{l + 2jn} = delta e_l.
// =====================================================================

/// Fourier coefficients <f, delta e_k>_n for k in {-n, ..., n-1};
/// coefficient of mode k lives at index k + n. Also serves as the trig
/// polynomial iota f = sum_k c_k e_k on the continuous torus.
struct Spectrum {
  GridSpec grid;
  std::vector<std::complex<double>> c;

  std::complex<double>& mode(int k) { return c[k + grid.n]; }
  const std::complex<double>& mode(int k) const { return c[k + grid.n]; }
};

Spectrum make_spectrum(const GridSpec& g);

Spectrum forward_transform(const GridFunction& f);
Spectrum forward_transform(const ComplexGridFunction& f);
ComplexGridFunction inverse_transform(const Spectrum& s);
/// Inverse transform of a Hermitian spectrum; imaginary parts (rounding
/// noise for genuinely real data) are dropped.
GridFunction inverse_transform_real(const Spectrum& s);

/// sum_k |c_k|^2, which by Parseval equals ||f||_{L^2(Pi_n)}^2.
double spectrum_energy(const Spectrum& s);
double l2_norm(const GridFunction& f);

/// Discrete Laplacian in multiplier form:
/// Delta_n f(x) = (2n)^2 (f(x + 1/2n) - 2 f(x) + f(x - 1/2n)).
GridFunction discrete_laplacian(const GridFunction& f);

/// Eigenvalue of Delta_n on mode j: lambda^n_j = -16 n^2 sin^2(j pi / 2n).
double eigenvalue(int n, int j);

/// gamma^n_j = lambda^n_j / lambda_j with lambda_j = -4 pi^2 j^2;
/// equals sinc^2(j pi / 2n), lies in [4/pi^2, 1], and is 1 at j = 0.
double gamma_ratio(int n, int j);

/// One-step multiplier of the discrete semigroup on mode j,
/// 1 + h lambda^n_j = 1 - 4 c sin^2(j pi / 2n); in [1/2, 1] for c <= 1/8.
double heat_step_multiplier(const GridSpec& g, int j);

/// P^n_t with t = steps * h: multiplies mode j by (1 + h lambda^n_j)^steps.
Spectrum discrete_semigroup_apply(const Spectrum& s, StepCount steps);

/// Continuous heat semigroup P_t: multiplies mode j by exp(-4 pi^2 j^2 t).
Spectrum continuous_semigroup_apply(const Spectrum& s, double t);

/// iota: the unique trig polynomial of degree range {-n..n-1} agreeing
/// with f on Pi_n (delta iota = id). Same data as the forward transform.
Spectrum extend_iota(const GridFunction& f);

/// delta: samples the trig polynomial on the target grid. Frequencies
/// fold modulo the target's 2n (delta e_{l+2jn} = delta e_l); a real f
/// may map to a complex restriction when the target is finer.
ComplexGridFunction restrict_delta(const Spectrum& s, const GridSpec& target);

/// delta e_j as a grid function (handy in tests).
ComplexGridFunction sample_mode(const GridSpec& g, int j);

}  // namespace besovrates
