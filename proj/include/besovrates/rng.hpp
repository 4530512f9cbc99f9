#pragma once

#include <cmath>
#include <cstdint>

namespace besovrates {

// =====================================================================
// Counter-based random numbers.
//
// The noise field must be a pure function of (seed, time step, cell
// index): any consumer, on any thread, asking for the same triple gets
// the same bits. A counter-based generator gives exactly that, so we
// use the Philox4x32-10 construction of Salmon et al. ("Parallel random
// numbers: as easy as 1, 2, 3"): ten rounds of a Feistel-like mix of a
// 128-bit counter under a 64-bit key. Distinct counters yield
// statistically independent 128-bit blocks.
// =====================================================================

namespace philox {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

struct Block {
  std::uint32_t x0, x1, x2, x3;
};

inline Block generate(std::uint64_t key, std::uint32_t c0, std::uint32_t c1,
                      std::uint32_t c2, std::uint32_t c3) {
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  std::uint32_t x0 = c0, x1 = c1, x2 = c2, x3 = c3;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x2;
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    x0 = hi1 ^ x1 ^ k0;
    x1 = lo1;
    x2 = hi0 ^ x3 ^ k1;
    x3 = lo0;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return Block{x0, x1, x2, x3};
}

}  // namespace philox

// Domain tags keep independent consumers of the same seed on disjoint
// counter ranges.
enum class RngDomain : std::uint32_t {
  noise_cells = 0,   // space-time white noise cells
  mode_noise = 1,    // spectral-space linear-case sampler
  test_fields = 2,   // random test functions in the property suites
};

/// Maps 64 random bits to a uniform double in (0, 1]; never returns 0,
/// so it is safe under a logarithm.
inline double bits_to_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1p-53;
}

struct GaussianPair {
  double z0, z1;
};

/// Two independent N(0,1) draws from one Philox block via Box-Muller.
inline GaussianPair gaussian_pair(std::uint64_t key, std::uint64_t counter_lo,
                                  std::uint32_t counter_hi, RngDomain domain) {
  const philox::Block b = philox::generate(
      key, static_cast<std::uint32_t>(counter_lo),
      static_cast<std::uint32_t>(counter_lo >> 32), counter_hi,
      static_cast<std::uint32_t>(domain));
  const std::uint64_t w0 =
      (static_cast<std::uint64_t>(b.x1) << 32) | b.x0;
  const std::uint64_t w1 =
      (static_cast<std::uint64_t>(b.x3) << 32) | b.x2;
  const double u1 = bits_to_unit(w0);
  const double u2 = bits_to_unit(w1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
#if defined(__GLIBC__)
  double s, c;
  ::sincos(a, &s, &c);
  return GaussianPair{r * c, r * s};
#else
  return GaussianPair{r * std::cos(a), r * std::sin(a)};
#endif
}

/// One uniform in (0,1] from the first 64 bits of a Philox block.
inline double uniform_draw(std::uint64_t key, std::uint64_t counter_lo,
                           std::uint32_t counter_hi, RngDomain domain) {
  const philox::Block b = philox::generate(
      key, static_cast<std::uint32_t>(counter_lo),
      static_cast<std::uint32_t>(counter_lo >> 32), counter_hi,
      static_cast<std::uint32_t>(domain));
  return bits_to_unit((static_cast<std::uint64_t>(b.x1) << 32) | b.x0);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Derives the seed of path number `path_index` in a Monte Carlo batch.
/// Distinct keys give independent Philox streams.
inline std::uint64_t path_seed(std::uint64_t base_seed,
                               std::uint64_t path_index) {
  return splitmix64(base_seed ^ splitmix64(path_index));
}

}  // namespace besovrates
