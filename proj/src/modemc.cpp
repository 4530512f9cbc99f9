#include "besovrates/modemc.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "besovrates/errors.hpp"
#include "besovrates/rng.hpp"
#include "besovrates/spectral.hpp"

namespace besovrates {

namespace {

constexpr double kPi = 3.14159265358979323846;

double geo_sum(double x, double count) {
  if (x == 1.0) return count;
  return (1.0 - std::pow(x, count)) / (1.0 - x);
}

struct ModeChannel {
  double b_window = 0.0;    // b_k^M
  double g_sigma = 0.0;     // sigma * sqrt(g2): scale of G
  double h_from_g = 0.0;    // g1 / g2: regression of H on G
  double h_sigma = 0.0;     // sigma * sqrt(M - g1^2/g2): residual of H
  std::complex<double> w;   // W(k), the cell phase sum
};

std::complex<double> circular_gaussian(std::uint64_t key, std::uint64_t lo,
                                       std::uint32_t hi) {
  const GaussianPair gp = gaussian_pair(key, lo, hi, RngDomain::mode_noise);
  return {gp.z0 * M_SQRT1_2, gp.z1 * M_SQRT1_2};
}

}  // namespace

ModeMcResult sample_coupled_mode_variance(
    const GridSpec& coarse, const GridSpec& fine, int ell,
    const std::vector<StepCount>& checkpoints, std::uint64_t base_seed,
    std::int64_t paths, int workers) {
  if (fine.n % coarse.n != 0 || fine.n == coarse.n) {
    throw coupling_error("mode mc: fine must refine coarse");
  }
  if (fine.c != coarse.c) throw coupling_error("mode mc: levels must share c");
  const int n = coarse.n;
  if (ell <= -n || ell >= n || ell == 0) {
    throw config_error("mode mc: mode must be nonzero and not the edge mode");
  }
  if (checkpoints.empty() || paths < 2) {
    throw config_error("mode mc: need checkpoints and at least two paths");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= 0 ||
        (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw config_error("mode mc: checkpoints must be positive, ascending");
    }
  }

  const int big_n = fine.n;
  const std::int64_t ratio = big_n / n;
  const double m_steps = double(ratio) * double(ratio);
  const double sigma = std::sqrt(fine.h()) / (2.0 * big_n);
  const double b_coarse = heat_step_multiplier(coarse, ell);

  std::vector<ModeChannel> channels;
  channels.reserve(ratio);
  for (int k = -big_n; k < big_n; ++k) {
    if (((k - ell) % (2 * n) + 2 * n) % (2 * n) != 0) continue;
    ModeChannel ch;
    const double b = heat_step_multiplier(fine, k);
    const double g1 = geo_sum(b, m_steps);
    const double g2 = geo_sum(b * b, m_steps);
    ch.b_window = std::pow(b, m_steps);
    ch.g_sigma = sigma * std::sqrt(g2);
    ch.h_from_g = g1 / g2;
    ch.h_sigma = sigma * std::sqrt(std::max(0.0, m_steps - g1 * g1 / g2));
    std::complex<double> w = 0.0;
    for (std::int64_t r = 0; r < ratio; ++r) {
      const double ph = kPi * double(k) * double(r) / double(big_n);
      w += std::complex<double>(std::cos(ph), std::sin(ph));
    }
    ch.w = w;
    channels.push_back(ch);
  }

  const StepCount last = checkpoints.back();
  const std::size_t n_ckpt = checkpoints.size();
  std::vector<double> sq(static_cast<std::size_t>(paths) * n_ckpt, 0.0);

  auto run_range = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<std::complex<double>> u_hat(channels.size());
    for (std::int64_t path = lo; path < hi; ++path) {
      const std::uint64_t key = path_seed(base_seed, uint64_t(path));
      std::fill(u_hat.begin(), u_hat.end(), std::complex<double>(0.0, 0.0));
      std::complex<double> v = 0.0;
      std::size_t next = 0;
      for (StepCount q = 0; q < last; ++q) {
        std::complex<double> coarse_in = 0.0;
        for (std::size_t ci = 0; ci < channels.size(); ++ci) {
          const ModeChannel& ch = channels[ci];
          const std::complex<double> z1 = circular_gaussian(
              key, std::uint64_t(q), std::uint32_t(ci) * 2u);
          const std::complex<double> z2 = circular_gaussian(
              key, std::uint64_t(q), std::uint32_t(ci) * 2u + 1u);
          const std::complex<double> g = ch.g_sigma * z1;
          const std::complex<double> h = ch.h_from_g * g + ch.h_sigma * z2;
          u_hat[ci] = ch.b_window * u_hat[ci] + (2.0 * big_n) * g;
          coarse_in += ch.w * h;
        }
        v = b_coarse * v + (2.0 * n) * coarse_in;
        while (next < n_ckpt && checkpoints[next] == q + 1) {
          std::complex<double> err = -v;
          for (const auto& u : u_hat) err += u;
          sq[std::size_t(path) * n_ckpt + next] = std::norm(err);
          ++next;
        }
      }
    }
  };

  const int nw = std::max(1, workers);
  if (nw == 1) {
    run_range(0, paths);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (paths + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
      const std::int64_t lo = w * chunk;
      const std::int64_t hi = std::min(paths, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  ModeMcResult out;
  out.paths = paths;
  out.estimates.resize(n_ckpt);
  for (std::size_t c = 0; c < n_ckpt; ++c) {
    double sum = 0.0;
    for (std::int64_t p = 0; p < paths; ++p) {
      sum += sq[std::size_t(p) * n_ckpt + c];
    }
    const double mean = sum / double(paths);
    double varsum = 0.0;
    for (std::int64_t p = 0; p < paths; ++p) {
      const double d = sq[std::size_t(p) * n_ckpt + c] - mean;
      varsum += d * d;
    }
    ModeMcEstimate est;
    est.coarse_steps = checkpoints[c];
    est.mean = mean;
    est.std_error = std::sqrt(varsum / (double(paths) - 1.0) / double(paths));
    out.estimates[c] = est;
  }
  return out;
}

}  // namespace besovrates
