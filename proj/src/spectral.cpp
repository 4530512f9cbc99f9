#include "besovrates/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace besovrates {

namespace {

// ================= FFT backend =================
// FFTW plans are cached per (size, sign). Plans are created with
// FFTW_ESTIMATE (deterministic, no runtime measuring) and
// FFTW_UNALIGNED so they may execute on arbitrary buffers. Plan
// creation is serialized; execution on distinct buffers is thread-safe.

class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int size, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_pair(size, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> dummy(size);
    fftw_plan p = fftw_plan_dft_1d(
        size, reinterpret_cast<fftw_complex*>(dummy.data()),
        reinterpret_cast<fftw_complex*>(dummy.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

// out[m] = sum_i in[i] e^{sign * 2 pi i m i / L}, unnormalized.
std::vector<std::complex<double>> dft(std::vector<std::complex<double>> in,
                                      int sign) {
  const int size = static_cast<int>(in.size());
  std::vector<std::complex<double>> out(size);
  fftw_plan p = PlanCache::instance().get(size, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

int mod_positive(long long a, int m) {
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

double power_int(double base, StepCount k) {
  return std::pow(base, static_cast<double>(k));
}

}  // namespace

Spectrum make_spectrum(const GridSpec& g) {
  return Spectrum{g, std::vector<std::complex<double>>(g.points(), 0.0)};
}

Spectrum forward_transform(const ComplexGridFunction& f) {
  const int L = f.grid.points();
  std::vector<std::complex<double>> bins = dft(f.v, FFTW_FORWARD);
  Spectrum s = make_spectrum(f.grid);
  for (int k = -f.grid.n; k < f.grid.n; ++k)
    s.mode(k) = bins[mod_positive(k, L)] / static_cast<double>(L);
  return s;
}

Spectrum forward_transform(const GridFunction& f) {
  ComplexGridFunction cf{f.grid, {f.v.begin(), f.v.end()}};
  return forward_transform(cf);
}

ComplexGridFunction inverse_transform(const Spectrum& s) {
  const int L = s.grid.points();
  std::vector<std::complex<double>> bins(L, 0.0);
  for (int k = -s.grid.n; k < s.grid.n; ++k)
    bins[mod_positive(k, L)] = s.mode(k);
  return ComplexGridFunction{s.grid, dft(std::move(bins), FFTW_BACKWARD)};
}

GridFunction inverse_transform_real(const Spectrum& s) {
  return real_part(inverse_transform(s));
}

double spectrum_energy(const Spectrum& s) {
  double e = 0.0;
  for (const auto& z : s.c) e += std::norm(z);
  return e;
}

double l2_norm(const GridFunction& f) {
  double e = 0.0;
  for (double x : f.v) e += x * x;
  return std::sqrt(e / f.grid.points());
}

GridFunction discrete_laplacian(const GridFunction& f) {
  const int L = f.grid.points();
  const double scale = static_cast<double>(L) * L;
  GridFunction out = make_function(f.grid);
  for (int i = 0; i < L; ++i) {
    const double right = f.v[(i + 1) % L];
    const double left = f.v[(i + L - 1) % L];
    out.v[i] = scale * (right - 2.0 * f.v[i] + left);
  }
  return out;
}

double eigenvalue(int n, int j) {
  const double s = std::sin(M_PI * j / (2.0 * n));
  return -16.0 * n * n * s * s;
}

double gamma_ratio(int n, int j) {
  if (j == 0) return 1.0;
  const double z = M_PI * j / (2.0 * n);
  const double r = std::sin(z) / z;
  return r * r;
}

double heat_step_multiplier(const GridSpec& g, int j) {
  const double s = std::sin(M_PI * j / (2.0 * g.n));
  return 1.0 - 4.0 * g.c * s * s;
}

Spectrum discrete_semigroup_apply(const Spectrum& s, StepCount steps) {
  if (steps < 0) throw config_error("discrete_semigroup_apply: steps < 0");
  Spectrum out = s;
  for (int j = -s.grid.n; j < s.grid.n; ++j)
    out.mode(j) *= power_int(heat_step_multiplier(s.grid, j), steps);
  return out;
}

Spectrum continuous_semigroup_apply(const Spectrum& s, double t) {
  if (t < 0) throw config_error("continuous_semigroup_apply: t < 0");
  Spectrum out = s;
  for (int j = -s.grid.n; j < s.grid.n; ++j)
    out.mode(j) *= std::exp(-4.0 * M_PI * M_PI * j * j * t);
  return out;
}

Spectrum extend_iota(const GridFunction& f) { return forward_transform(f); }

ComplexGridFunction restrict_delta(const Spectrum& s, const GridSpec& target) {
  Spectrum folded = make_spectrum(target);
  const int L = target.points();
  for (int k = -s.grid.n; k < s.grid.n; ++k) {
    int kf = mod_positive(k, L);
    if (kf >= target.n) kf -= L;  // back to {-n', ..., n'-1}
    folded.mode(kf) += s.mode(k);
  }
  return inverse_transform(folded);
}

ComplexGridFunction sample_mode(const GridSpec& g, int j) {
  ComplexGridFunction f{g, std::vector<std::complex<double>>(g.points())};
  for (int i = 0; i < g.points(); ++i) {
    const double a = 2.0 * M_PI * j * g.point(i);
    f.v[i] = {std::cos(a), std::sin(a)};
  }
  return f;
}

}  // namespace besovrates
