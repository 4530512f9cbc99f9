#include "besovrates/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "besovrates/errors.hpp"
#include "besovrates/spectral.hpp"

namespace besovrates {

Exponent Exponent::finite(double v) {
  if (!(v >= 1.0)) throw config_error("Exponent: need p >= 1");
  return Exponent{v, false};
}

double lp_norm(const GridFunction& f, Exponent p) {
  const int m = f.grid.points();
  if (p.is_inf) {
    double best = 0.0;
    for (double v : f.v) best = std::max(best, std::abs(v));
    return best;
  }
  double acc = 0.0;
  for (double v : f.v) acc += std::pow(std::abs(v), p.value);
  return std::pow(acc / m, 1.0 / p.value);
}

namespace {

GridFunction block_from_spectrum(const Spectrum& s, int j,
                                 const FilterBank& bank) {
  Spectrum cut = s;
  const int n = s.grid.n;
  for (int k = -n; k < n; ++k) cut.mode(k) *= bank.weight(j, k);
  return inverse_transform_real(cut);
}

}  // namespace

GridFunction lp_block(const GridFunction& f, int j, const FilterBank& bank) {
  if (f.grid.n != bank.grid.n) throw config_error("lp_block: grid mismatch");
  if (j < 0 || j >= bank.levels) throw config_error("lp_block: bad level");
  return block_from_spectrum(forward_transform(f), j, bank);
}

std::vector<GridFunction> lp_decompose(const GridFunction& f,
                                       const FilterBank& bank) {
  if (f.grid.n != bank.grid.n) {
    throw config_error("lp_decompose: grid mismatch");
  }
  const Spectrum s = forward_transform(f);
  std::vector<GridFunction> out;
  out.reserve(bank.levels);
  for (int j = 0; j < bank.levels; ++j) {
    out.push_back(block_from_spectrum(s, j, bank));
  }
  return out;
}

namespace {

// l^q of the weighted block norms, scaled by the max term so large q
// cannot overflow or underflow.
double lq_combine(const std::vector<double>& terms, Exponent q) {
  double top = 0.0;
  for (double t : terms) top = std::max(top, t);
  if (q.is_inf || top == 0.0) return top;
  double acc = 0.0;
  for (double t : terms) acc += std::pow(t / top, q.value);
  return top * std::pow(acc, 1.0 / q.value);
}

}  // namespace

double besov_norm(const GridFunction& f, double alpha, Exponent p, Exponent q,
                  const FilterBank& bank) {
  const auto blocks = lp_decompose(f, bank);
  std::vector<double> terms(blocks.size());
  for (size_t j = 0; j < blocks.size(); ++j) {
    terms[j] = std::pow(2.0, alpha * double(j)) * lp_norm(blocks[j], p);
  }
  return lq_combine(terms, q);
}

double besov_norm(const GridFunction& f, const BesovParams& params,
                  const FilterBank& bank) {
  return besov_norm(f, params.alpha, params.p, params.q, bank);
}

double besov_norm(const GridFunction& f, double alpha, Exponent p,
                  Exponent q) {
  return besov_norm(f, alpha, p, q, build_filter_bank(f.grid));
}

double holder_norm(const GridFunction& f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw config_error("holder_norm: alpha must lie in (0, 1)");
  }
  const int m = f.grid.points();
  double sup = 0.0;
  for (double v : f.v) sup = std::max(sup, std::abs(v));
  double semi = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int gap = std::min(j - i, m - (j - i));
      const double d = static_cast<double>(gap) / m;
      const double r = std::abs(f.v[i] - f.v[j]) / std::pow(d, alpha);
      semi = std::max(semi, r);
    }
  }
  return sup + semi;
}

namespace {

void add_product(GridFunction& acc, const GridFunction& a,
                 const GridFunction& b) {
  for (size_t i = 0; i < acc.v.size(); ++i) acc.v[i] += a.v[i] * b.v[i];
}

}  // namespace

namespace {

// pi_<(f, g) = sum_{k >= 2} f^{[k]} g^{[<= k-2]} from precomputed blocks
GridFunction lower_from_blocks(const std::vector<GridFunction>& fb,
                               const std::vector<GridFunction>& gb,
                               const GridSpec& grid) {
  GridFunction low = make_function(grid);
  GridFunction out = make_function(grid);
  for (std::size_t k = 2; k < fb.size(); ++k) {
    for (size_t i = 0; i < low.v.size(); ++i) low.v[i] += gb[k - 2].v[i];
    add_product(out, fb[k], low);
  }
  return out;
}

GridFunction diagonal_from_blocks(const std::vector<GridFunction>& fb,
                                  const std::vector<GridFunction>& gb,
                                  const GridSpec& grid) {
  GridFunction out = make_function(grid);
  const int levels = static_cast<int>(fb.size());
  for (int k = 0; k < levels; ++k) {
    for (int l = std::max(0, k - 1); l <= std::min(levels - 1, k + 1); ++l) {
      add_product(out, fb[k], gb[l]);
    }
  }
  return out;
}

}  // namespace

Paraproducts paraproducts(const GridFunction& f, const GridFunction& g,
                          const FilterBank& bank) {
  const auto fb = lp_decompose(f, bank);
  const auto gb = lp_decompose(g, bank);
  Paraproducts out{lower_from_blocks(fb, gb, f.grid),
                   diagonal_from_blocks(fb, gb, f.grid),
                   lower_from_blocks(gb, fb, f.grid)};
  return out;
}

GridFunction para_lower(const GridFunction& f, const GridFunction& g,
                        const FilterBank& bank) {
  return lower_from_blocks(lp_decompose(f, bank), lp_decompose(g, bank),
                           f.grid);
}

GridFunction para_diagonal(const GridFunction& f, const GridFunction& g,
                           const FilterBank& bank) {
  return diagonal_from_blocks(lp_decompose(f, bank), lp_decompose(g, bank),
                              f.grid);
}

GridFunction para_upper(const GridFunction& f, const GridFunction& g,
                        const FilterBank& bank) {
  return para_lower(g, f, bank);
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
  if (f.grid.n != g.grid.n) {
    throw config_error("pointwise_product: grid mismatch");
  }
  GridFunction out = f;
  for (size_t i = 0; i < out.v.size(); ++i) out.v[i] *= g.v[i];
  return out;
}

}  // namespace besovrates
