#include "besovrates/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "besovrates/errors.hpp"

namespace besovrates {

void stream_fine_noise_into(const GridSpec& g, std::uint64_t seed,
                            StepCount step, std::vector<double>& out) {
  if (step < 0) throw config_error("stream_fine_noise: negative step");
  const int m = g.points();
  out.resize(m);
  const double sd = std::sqrt(g.h() / m);
  // counter: low word = time step, high word = pair index within the step
  for (int i = 0; i < m; i += 2) {
    const auto gp = gaussian_pair(seed, static_cast<std::uint64_t>(step),
                                  static_cast<std::uint32_t>(i / 2),
                                  RngDomain::noise_cells);
    out[i] = sd * gp.z0;
    if (i + 1 < m) out[i + 1] = sd * gp.z1;
  }
}

std::vector<double> stream_fine_noise(const GridSpec& g, std::uint64_t seed,
                                      StepCount step) {
  std::vector<double> out;
  stream_fine_noise_into(g, seed, step, out);
  return out;
}

CellBlock collect_cells(const GridSpec& fine, const GridSpec& coarse,
                        std::uint64_t seed, StepCount coarse_step) {
  if (fine.n % coarse.n != 0) {
    throw coupling_error("collect_cells: fine grid must refine coarse grid");
  }
  const std::int64_t ratio = fine.n / coarse.n;
  const std::int64_t per = ratio * ratio;  // fine steps per coarse step
  CellBlock b;
  b.grid = fine;
  b.first_step = coarse_step * per;
  b.steps.resize(per);
  for (std::int64_t s = 0; s < per; ++s) {
    stream_fine_noise_into(fine, seed, b.first_step + s, b.steps[s]);
  }
  return b;
}

CellBlock octave_reduce(const CellBlock& b) {
  if (b.grid.n % 2 != 0) {
    throw coupling_error("octave_reduce: grid size must be even");
  }
  if (b.steps.size() % 4 != 0 || b.first_step % 4 != 0) {
    throw coupling_error("octave_reduce: block must cover whole coarse steps");
  }
  CellBlock out;
  out.grid = make_grid(b.grid.n / 2, b.grid.c);
  out.first_step = b.first_step / 4;
  const std::size_t coarse_steps = b.steps.size() / 4;
  const int m = out.grid.points();
  out.steps.assign(coarse_steps, std::vector<double>(m, 0.0));
  for (std::size_t s = 0; s < coarse_steps; ++s) {
    auto& dst = out.steps[s];
    for (int a = 0; a < 4; ++a) {
      const auto& src = b.steps[4 * s + a];
      for (int i = 0; i < m; ++i) {
        dst[i] += src[2 * i];
        dst[i] += src[2 * i + 1];
      }
    }
  }
  return out;
}

CellBlock coarsen(const CellBlock& b, const GridSpec& target) {
  if (b.grid.n % target.n != 0) {
    throw coupling_error("coarsen: target must divide the block's grid");
  }
  int ratio = b.grid.n / target.n;
  if ((ratio & (ratio - 1)) != 0) {
    throw coupling_error("coarsen: grid ratio must be a power of two");
  }
  CellBlock cur = b;
  while (cur.grid.n > target.n) cur = octave_reduce(cur);
  return cur;
}

GridFunction eta_increment(const std::vector<double>& cells,
                           const GridSpec& g) {
  if (cells.size() != static_cast<std::size_t>(g.points())) {
    throw config_error("eta_increment: cell array has the wrong length");
  }
  GridFunction out = make_function(g);
  const double scale = static_cast<double>(g.points()) / g.h();
  for (std::size_t i = 0; i < cells.size(); ++i) out.v[i] = scale * cells[i];
  return out;
}

}  // namespace besovrates
