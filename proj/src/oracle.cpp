#include "besovrates/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "besovrates/errors.hpp"

namespace besovrates {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sum_{q < count} x^q, safe at x == 1
double geo_sum(double x, double count) {
  if (x == 1.0) return count;
  return (1.0 - std::pow(x, count)) / (1.0 - x);
}

// integral of the continuum semigroup factor against the scheme's step
// ladder: sum_{q<K} (b e^{lam h})^q * (e^{lam h}-1)/lam, written so the
// 1 - b e^{lam h} denominator never cancels catastrophically.
double scheme_continuum_cross(double lam, double b, double one_minus_b,
                              double h, double steps) {
  const double x = lam * h;
  const double em = std::expm1(x);  // e^{lam h} - 1, in (-1, 0)
  const double head = em / lam;     // positive
  const double one_minus_r = one_minus_b - b * em;  // 1 - b e^{lam h} > 0
  const double r = b * (1.0 + em);
  const double rk = r > 0.0 ? std::pow(r, steps) : 0.0;
  return head * (1.0 - rk) / one_minus_r;
}

}  // namespace

double exact_mode_variance(const GridSpec& g, int ell, StepCount steps) {
  if (ell < -g.n || ell >= g.n) {
    throw config_error("exact_mode_variance: mode out of range");
  }
  if (steps < 0) throw config_error("exact_mode_variance: negative time");
  if (steps == 0) return 0.0;

  const int n = g.n;
  const double h = g.h();
  const double t = g.time_of(steps);
  const double k_count = static_cast<double>(steps);
  const double b = heat_step_multiplier(g, ell);
  const double one_minus_b =
      4.0 * g.c * std::pow(std::sin(0.5 * kPi * ell / n), 2);

  // --- direct part: continuum mode ell vs scheme mode ell -------------
  double v_direct = 0.0;
  if (ell != 0) {
    const double lam = -4.0 * kPi * kPi * double(ell) * double(ell);
    const double i_aa = std::expm1(2.0 * lam * t) / (2.0 * lam);
    const double i_bb = h * geo_sum(b * b, k_count);
    const double s_ell = std::sin(kPi * ell / double(n)) /
                         (kPi * ell / double(n));
    const double i_ab =
        scheme_continuum_cross(lam, b, one_minus_b, h, k_count);
    v_direct = i_aa + i_bb - 2.0 * s_ell * i_ab;
  }

  // --- alias part: continuum modes ell + 2jn, j != 0 ------------------
  double q_lattice;  // sum_{j != 0} (ell + 2jn)^{-2}
  if (ell == 0) {
    q_lattice = kPi * kPi / (12.0 * double(n) * double(n));
  } else {
    const double z = 0.5 * kPi * ell / n;
    const double s = std::sin(z);
    q_lattice = std::pow(0.5 * kPi / n, 2) / (s * s) -
                1.0 / (double(ell) * double(ell));
  }
  double v_alias = q_lattice / (8.0 * kPi * kPi);
  for (int j = 1;; ++j) {
    bool alive = false;
    for (int sign : {+1, -1}) {
      const double m = double(ell) + 2.0 * double(sign) * j * n;
      const double arg = 8.0 * kPi * kPi * m * m * t;
      if (arg < 80.0) {
        v_alias -= std::exp(-arg) / (8.0 * kPi * kPi * m * m);
        alive = true;
      }
    }
    if (!alive || j > 2000000) break;
  }

  // --- alias cross part: continuum modes ell + 2jn vs scheme mode ell -
  double cross = 0.0;
  const double s_l = std::sin(kPi * ell / double(n));
  if (ell != 0 && s_l != 0.0) {
    double scale = v_direct + v_alias;
    int quiet = 0;
    for (int j = 1; j <= 20000 && quiet < 3; ++j) {
      double pair = 0.0;
      for (int sign : {+1, -1}) {
        const double m = double(ell) + 2.0 * double(sign) * j * n;
        const double re_d = double(n) * s_l / (kPi * m);
        const double lam = -4.0 * kPi * kPi * m * m;
        pair -= 2.0 * re_d *
                scheme_continuum_cross(lam, b, one_minus_b, h, k_count);
      }
      cross += pair;
      if (std::abs(pair) < 1e-16 * std::max(std::abs(scale), 1e-300)) {
        ++quiet;
      } else {
        quiet = 0;
      }
    }
  }

  const double total = v_direct + v_alias + cross;
  return total > 0.0 ? total : 0.0;
}

double coupled_mode_variance(const GridSpec& coarse, const GridSpec& fine,
                             int ell, StepCount coarse_steps) {
  if (fine.n % coarse.n != 0 || fine.n == coarse.n) {
    throw coupling_error("coupled_mode_variance: fine must refine coarse");
  }
  if (fine.c != coarse.c) {
    throw coupling_error("coupled_mode_variance: levels must share c");
  }
  if (ell < -coarse.n || ell >= coarse.n) {
    throw config_error("coupled_mode_variance: mode out of range");
  }
  if (coarse_steps < 0) {
    throw config_error("coupled_mode_variance: negative time");
  }
  if (coarse_steps == 0) return 0.0;

  const int n = coarse.n;
  const int big_n = fine.n;
  const std::int64_t ratio = big_n / n;
  const double m_steps = static_cast<double>(ratio) * ratio;
  const double h_fine = fine.h();
  const double k_coarse = static_cast<double>(coarse_steps);
  const double p_fine = k_coarse * m_steps;
  const double b_coarse = heat_step_multiplier(coarse, ell);

  double sum_fine = 0.0;
  double cross = 0.0;
  for (int k = -big_n; k < big_n; ++k) {
    if (((k - ell) % (2 * n) + 2 * n) % (2 * n) != 0) continue;
    const double b_k = heat_step_multiplier(fine, k);
    sum_fine += h_fine * geo_sum(b_k * b_k, p_fine);

    // W(k) = sum_{r<R} exp(i pi k r / N); only its real part survives
    double w_re = 0.0;
    for (std::int64_t r = 0; r < ratio; ++r) {
      w_re += std::cos(kPi * double(k) * double(r) / double(big_n));
    }
    const double b_k_m = std::pow(b_k, m_steps);
    cross -= 2.0 * (w_re / double(ratio)) * h_fine * geo_sum(b_k, m_steps) *
             geo_sum(b_coarse * b_k_m, k_coarse);
  }
  const double h_coarse = coarse.h();
  const double sum_coarse = h_coarse * geo_sum(b_coarse * b_coarse, k_coarse);
  const double total = sum_fine + sum_coarse + cross;
  return total > 0.0 ? total : 0.0;
}

double kolmogorov_bound(const std::vector<double>& variances, double alpha,
                        double q, const FilterBank& bank) {
  const int n = bank.grid.n;
  if (variances.size() != static_cast<std::size_t>(2 * n)) {
    throw config_error("kolmogorov_bound: need one variance per mode");
  }
  if (!(q >= 1.0)) throw config_error("kolmogorov_bound: q must be >= 1");

  // log of each block term; the l^q sum runs in log space because
  // q as large as a few hundred underflows any direct power.
  std::vector<double> logs;
  logs.reserve(bank.levels);
  for (int j = 0; j < bank.levels; ++j) {
    double s = 0.0;
    for (int k = -n; k < n; ++k) {
      const double w = bank.weight(j, k);
      if (w != 0.0) s += w * w * variances[k + n];
    }
    if (s <= 0.0) continue;
    const double log_sj = 2.0 * alpha * double(j) * std::log(2.0) +
                          std::log(s);
    logs.push_back(double(j) * std::log(2.0) + 0.5 * q * log_sj);
  }
  if (logs.empty()) return 0.0;
  double top = logs[0];
  for (double l : logs) top = std::max(top, l);
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - top);
  return std::exp((top + std::log(acc)) / q);
}

std::vector<LowerBoundRow> lower_bound_scan(const std::vector<int>& ns,
                                            double c, std::int64_t t_num,
                                            std::int64_t t_den) {
  std::vector<LowerBoundRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    const GridSpec g = make_grid(n, c);
    if ((t_num * g.steps_per_unit) % t_den != 0) {
      throw config_error("lower_bound_scan: time not on the step grid");
    }
    const StepCount steps = t_num * g.steps_per_unit / t_den;
    LowerBoundRow row;
    row.n = n;
    row.mode_variance = exact_mode_variance(g, 1, steps);
    row.scaled_variance = double(n) * double(n) * row.mode_variance;
    rows.push_back(row);
  }
  return rows;
}

KernelProbe heat_kernel_probe(const Spectrum& psi, const GridSpec& g,
                              StepCount steps) {
  for (int k = -psi.grid.n; k < psi.grid.n; ++k) {
    if (std::abs(k) >= g.n && std::abs(psi.mode(k)) != 0.0) {
      throw config_error("heat_kernel_probe: psi has modes outside the band");
    }
  }
  if (steps <= 0) throw config_error("heat_kernel_probe: need steps >= 1");
  const double t = g.time_of(steps);

  // transplant psi onto the probe grid (no folding: band-limited)
  Spectrum on_grid = make_spectrum(g);
  for (int k = -g.n; k < g.n; ++k) {
    if (k >= -psi.grid.n && k < psi.grid.n) on_grid.mode(k) = psi.mode(k);
  }
  const Spectrum sd = discrete_semigroup_apply(on_grid, steps);
  const Spectrum sc = continuous_semigroup_apply(on_grid, t);
  const GridFunction ud = inverse_transform_real(sd);
  const GridFunction uc = inverse_transform_real(sc);
  KernelProbe probe;
  for (int i = 0; i < g.points(); ++i) {
    probe.sup_error = std::max(probe.sup_error, std::abs(ud.v[i] - uc.v[i]));
  }

  // squared L^2 distance between the continuum kernel and the cell
  // extension of the discrete one
  const int n = g.n;
  auto fold = [&](long j) {
    long r = ((j + n) % (2 * n) + 2 * n) % (2 * n);
    return static_cast<int>(r - n);
  };
  double term_cc = 0.0, term_dd = 0.0, term_cd = 0.0;
  for (int j = -n; j < n; ++j) {
    const double mu = std::pow(heat_step_multiplier(g, j), double(steps));
    term_dd += mu * mu;
  }
  for (long j = 0; j <= 100000000L; ++j) {
    const double lam = -4.0 * kPi * kPi * double(j) * double(j);
    if (j > 0 && -lam * t > 80.0) break;
    const int reps = (j == 0) ? 1 : 2;  // +-j give equal contributions
    const double mu =
        std::pow(heat_step_multiplier(g, fold(j)), double(steps));
    const double z = kPi * double(j) / double(n);
    const double cell = (j == 0) ? 1.0 : std::sin(z) / z;
    term_cc += reps * std::exp(2.0 * lam * t);
    term_cd += reps * std::exp(lam * t) * mu * cell;
  }
  probe.kernel_l2_sq = term_cc + term_dd - 2.0 * term_cd;
  return probe;
}

}  // namespace besovrates
