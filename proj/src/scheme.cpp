#include "besovrates/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "besovrates/errors.hpp"

namespace besovrates {

bool Polynomial::is_zero() const {
  for (double a : coeffs) {
    if (a != 0.0) return false;
  }
  return true;
}

int Polynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] != 0.0) return i;
  }
  return -1;
}

double Polynomial::operator()(double v) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * v + coeffs[i];
  return acc;
}

Polynomial allen_cahn() { return Polynomial{{0.0, 1.0, 0.0, -1.0}}; }

void validate_reaction(const Polynomial& f) {
  if (f.is_zero()) return;
  const int d = f.degree();
  if (d < 3 || d % 2 == 0) {
    throw config_error("reaction must be zero or of odd degree >= 3");
  }
  if (!(f.coeffs[d] < 0.0)) {
    throw config_error("reaction needs a negative leading coefficient");
  }
}

namespace {

void step_kernel(const GridSpec& g, const std::vector<double>& u,
                 std::vector<double>& out, const std::vector<double>& eta,
                 const Polynomial& f) {
  const int m = g.points();
  const double h = g.h();
  const double lap = static_cast<double>(m) * static_cast<double>(m);
  const bool linear = f.is_zero();
  for (int i = 0; i < m; ++i) {
    const double left = u[(i + m - 1) % m];
    const double right = u[(i + 1) % m];
    double drift = lap * (right - 2.0 * u[i] + left);
    if (!linear) drift += f(u[i]);
    out[i] = u[i] + h * (drift + eta[i]);
  }
}

double sup_abs(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

double lmu_norm(const std::vector<double>& a, const std::vector<double>& b,
                int mu) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    acc += std::pow(d, mu);
  }
  return std::pow(acc / static_cast<double>(a.size()), 1.0 / mu);
}

}  // namespace

void euler_step(GridFunction& u, const std::vector<double>& eta,
                const Polynomial& f) {
  if (eta.size() != u.v.size()) throw config_error("euler_step: eta size");
  std::vector<double> next(u.v.size());
  step_kernel(u.grid, u.v, next, eta, f);
  u.v.swap(next);
}

bool omega_holds(const AprioriMonitor& m, int n, int nu) {
  const double lhs =
      std::pow(m.linear_sup, static_cast<double>(nu) * (nu + m.mu));
  const double rhs =
      std::pow(static_cast<double>(n),
               2.0 - 2.0 * (nu - 1.0) / static_cast<double>(m.mu));
  return lhs <= rhs;
}

double monitor_ratio(const AprioriMonitor& m, int nu) {
  const double expo = (nu + m.mu - 1.0) / static_cast<double>(m.mu);
  return m.deviation_mu / std::pow(m.linear_sup, expo);
}

StepCount steps_at(const GridSpec& g, const TimePoint& t) {
  if (t.den <= 0) throw config_error("time point: denominator must be > 0");
  if (t.num < 0) throw config_error("time point: negative time");
  const std::int64_t raw = t.num * g.steps_per_unit;
  if (raw % t.den != 0) {
    throw config_error("time point does not lie on the step grid");
  }
  return raw / t.den;
}

namespace {

struct LevelState {
  GridSpec g;
  std::int64_t fine_per_step = 1;  // fine steps per one step here
  int shift = 0;                   // log2 of the spatial ratio
  std::vector<double> u, o, scratch, acc, eta;
  StepCount steps_done = 0;
  AprioriMonitor monitor;
  StepCount frozen_at = -1;
  std::vector<StepCount> ckpt_steps;
  std::size_t next_ckpt = 0;
  std::vector<GridFunction> states, linear_states;
};

int log2_exact(std::int64_t r) {
  int s = 0;
  while ((std::int64_t{1} << s) < r) ++s;
  if ((std::int64_t{1} << s) != r) {
    throw coupling_error("level ratios must be powers of two");
  }
  return s;
}

std::vector<PathRecord> run_levels(const std::vector<GridSpec>& levels,
                                   const InitialData& psi, const Polynomial& f,
                                   std::uint64_t seed,
                                   const SolveOptions& opt) {
  if (levels.empty()) throw config_error("solve: no levels given");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].n <= levels[i - 1].n || levels[i].n % levels[i - 1].n != 0) {
      throw coupling_error("levels must be ascending refinements");
    }
    if (levels[i].c != levels[i - 1].c) {
      throw coupling_error("levels must share the step-size ratio c");
    }
  }
  validate_reaction(f);
  const GridSpec fine = levels.back();

  std::vector<LevelState> st(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    LevelState& s = st[i];
    s.g = levels[i];
    const std::int64_t ratio = fine.n / s.g.n;
    s.fine_per_step = ratio * ratio;
    s.shift = log2_exact(ratio);
    const int m = s.g.points();
    GridFunction init = psi ? psi(s.g) : make_function(s.g);
    if (init.grid.n != s.g.n) {
      throw config_error("initial data sampled on the wrong grid");
    }
    s.u = init.v;
    s.o.assign(m, 0.0);
    s.scratch.assign(m, 0.0);
    s.acc.assign(m, 0.0);
    s.eta.assign(m, 0.0);
    s.monitor.mu = opt.mu;
    s.monitor.linear_sup = 1.0;
    s.monitor.deviation_mu = lmu_norm(s.u, s.o, opt.mu);
    StepCount horizon = steps_at(s.g, opt.horizon);
    s.ckpt_steps.reserve(opt.checkpoints.size());
    StepCount prev = 0;
    for (const TimePoint& t : opt.checkpoints) {
      const StepCount k = steps_at(s.g, t);
      if (k < prev || k > horizon) {
        throw config_error("checkpoints must be ascending and <= horizon");
      }
      s.ckpt_steps.push_back(k);
      prev = k;
    }
    // time-zero checkpoints resolve immediately
    while (s.next_ckpt < s.ckpt_steps.size() &&
           s.ckpt_steps[s.next_ckpt] == 0) {
      s.states.push_back(GridFunction{s.g, s.u});
      s.linear_states.push_back(GridFunction{s.g, s.o});
      ++s.next_ckpt;
    }
  }

  const StepCount fine_total = steps_at(fine, opt.horizon);
  std::vector<double> cells;
  for (StepCount p = 0; p < fine_total; ++p) {
    stream_fine_noise_into(fine, seed, p, cells);
    for (LevelState& s : st) {
      const int shift = s.shift;
      for (int x = 0; x < fine.points(); ++x) s.acc[x >> shift] += cells[x];
      if ((p + 1) % s.fine_per_step != 0) continue;

      const double h = s.g.h();
      const double eta_scale = static_cast<double>(s.g.points()) / h;
      for (std::size_t i = 0; i < s.eta.size(); ++i) {
        s.eta[i] = s.acc[i] * eta_scale;
        s.acc[i] = 0.0;
      }
      if (s.frozen_at < 0) {
        step_kernel(s.g, s.u, s.scratch, s.eta, f);
        s.u.swap(s.scratch);
      }
      {
        static const Polynomial kZero{};
        step_kernel(s.g, s.o, s.scratch, s.eta, kZero);
        s.o.swap(s.scratch);
      }
      ++s.steps_done;

      const double usup = sup_abs(s.u);
      if (!std::isfinite(usup) || usup > opt.blow_up_threshold) {
        throw blow_up_error("scheme state blew up",
                            s.g.time_of(s.steps_done), usup);
      }
      s.monitor.linear_sup =
          std::max(s.monitor.linear_sup, 1.0 + sup_abs(s.o));
      s.monitor.deviation_mu =
          std::max(s.monitor.deviation_mu, lmu_norm(s.u, s.o, opt.mu));
      if (opt.truncation_factor > 0.0 && s.frozen_at < 0) {
        double acc_mu = 0.0;
        for (double v : s.u) acc_mu += std::pow(std::abs(v), opt.mu);
        const double norm_mu =
            std::pow(acc_mu / s.u.size(), 1.0 / opt.mu);
        if (norm_mu >= opt.truncation_factor * s.g.n) {
          s.frozen_at = s.steps_done;
        }
      }
      while (s.next_ckpt < s.ckpt_steps.size() &&
             s.ckpt_steps[s.next_ckpt] == s.steps_done) {
        s.states.push_back(GridFunction{s.g, s.u});
        s.linear_states.push_back(GridFunction{s.g, s.o});
        ++s.next_ckpt;
      }
    }
  }

  std::vector<PathRecord> out;
  out.reserve(st.size());
  for (LevelState& s : st) {
    PathRecord r;
    r.grid = s.g;
    r.seed = seed;
    r.checkpoint_steps = std::move(s.ckpt_steps);
    r.states = std::move(s.states);
    r.linear_states = std::move(s.linear_states);
    r.monitor = s.monitor;
    r.frozen_at = s.frozen_at;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PathRecord solve_path(const GridSpec& g, const InitialData& psi,
                      const Polynomial& f, std::uint64_t seed,
                      const SolveOptions& opt) {
  return run_levels({g}, psi, f, seed, opt)[0];
}

AprioriReport apriori_report(const PathRecord& rec, int nu) {
  if (rec.monitor.mu <= nu || rec.monitor.mu % 2 != 0) {
    throw config_error("apriori_report: mu must be even and exceed nu");
  }
  AprioriReport rep;
  rep.linear_sup = rec.monitor.linear_sup;
  rep.deviation_mu = rec.monitor.deviation_mu;
  rep.omega = omega_holds(rec.monitor, rec.grid.n, nu);
  rep.ratio = monitor_ratio(rec.monitor, nu);
  return rep;
}

std::vector<PathRecord> coupled_solve(const std::vector<GridSpec>& levels,
                                      const InitialData& psi,
                                      const Polynomial& f, std::uint64_t seed,
                                      const SolveOptions& opt) {
  return run_levels(levels, psi, f, seed, opt);
}

}  // namespace besovrates
