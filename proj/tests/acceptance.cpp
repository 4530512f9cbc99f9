// Acceptance harness: one line per criterion, [PASS]/[FAIL], nonzero
// exit when anything fails. Tolerances are pinned here on purpose;
// change them only with a written justification next to the number.
//
// Usage: acceptance [--workers N] [criterion numbers...]
//        (no numbers: run all eight)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "besovrates/checks.hpp"
#include "besovrates/config.hpp"
#include "besovrates/experiments.hpp"
#include "besovrates/modemc.hpp"
#include "besovrates/oracle.hpp"
#include "besovrates/scheme.hpp"

using namespace besovrates;
using nlohmann::json;

namespace {

int g_workers = 1;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return std::string(buf);
}

// shared criterion-5 run (criterion 8 reads the same report)
const json& rates_report() {
  static std::optional<json> cached;
  if (!cached) {
    RunConfig cfg;  // defaults are the headline experiment
    cfg.mode = "rates";
    cfg.workers = g_workers;
    std::fprintf(stderr, "  [rates: %d seeds, levels 16/32/64 vs 256...]\n",
                 cfg.seeds);
    cached = run_rates(cfg).report;
  }
  return *cached;
}

// ---------------------------------------------------------------------
// 1. deterministic linear rate via the oracle + Besov Gaussian bound
// ---------------------------------------------------------------------
Outcome criterion1() {
  const double t0 = now_seconds();
  RunConfig cfg;
  cfg.mode = "linear-oracle";
  cfg.levels = {16, 32, 64, 128, 256};
  cfg.theta_list = {-0.4};  // the driver adds the (-0.45, 256) probe
  cfg.horizon_num = 1;
  cfg.horizon_den = 1;
  const json report = run_linear_oracle(cfg).report;

  const double s1 = report["fits"]["alpha=-0.4,q=64"]["slope"].get<double>();
  const double s2 = report["fits"]["alpha=-0.45,q=256"]["slope"].get<double>();
  const double elapsed = now_seconds() - t0;

  Outcome out;
  out.require(s1 >= -1.00 && s1 <= -0.78,
              "slope(a=-0.4,q=64)=" + num(s1) + " in [-1.00,-0.78]");
  out.require(s2 >= -1.05 && s2 <= -0.85,
              "slope(a=-0.45,q=256)=" + num(s2) + " in [-1.05,-0.85]");
  out.require(elapsed < 60.0, num(elapsed) + "s < 60s");
  return out;
}

// ---------------------------------------------------------------------
// 2. rate-1 saturation: n^2 a_1^2(1/4) bounded above and below
// ---------------------------------------------------------------------
Outcome criterion2() {
  RunConfig cfg;
  cfg.mode = "lower-bound";
  cfg.levels = {16, 32, 64, 128, 256};
  cfg.horizon_num = 1;
  cfg.horizon_den = 4;
  const json report = run_lower_bound(cfg).report;
  const double lo = report["min_scaled_variance"].get<double>();
  const double hi = report["max_scaled_variance"].get<double>();

  Outcome out;
  out.require(lo > 0.0, "min n^2 a_1^2 = " + num(lo) + " > 0");
  out.require(hi / lo <= 10.0,
              "max/min = " + num(hi / lo) + " <= 10");
  return out;
}

// ---------------------------------------------------------------------
// 3. uniform mode bound: max_l n^2 a_l^2(1) does not grow past n = 16
// ---------------------------------------------------------------------
Outcome criterion3() {
  RunConfig cfg;
  cfg.mode = "linear-oracle";
  cfg.levels = {16, 32, 64, 128, 256};
  cfg.theta_list = {-0.4};
  cfg.horizon_num = 1;
  cfg.horizon_den = 1;
  const json report = run_linear_oracle(cfg).report;

  double base = 0.0;
  Outcome out;
  for (const json& lvl : report["per_level"]) {
    const int n = lvl["n"].get<int>();
    const double v = lvl["max_scaled_variance"].get<double>();
    if (n == 16) base = v;
    if (n > 16)
      out.require(v <= 2.0 * base, "n=" + std::to_string(n) + ": " + num(v) +
                                       " <= 2x" + num(base));
  }
  out.require(base > 0.0, "baseline(n=16)=" + num(base));
  return out;
}

// ---------------------------------------------------------------------
// 4. Monte Carlo cross-validation of the covariance oracle
// ---------------------------------------------------------------------
Outcome criterion4() {
  const GridSpec coarse = make_grid(16);
  const GridSpec fine = make_grid(256);
  const StepCount steps = coarse.steps_per_unit;  // t = 1
  const double exact = exact_mode_variance(coarse, 1, steps);
  const double coupled = coupled_mode_variance(coarse, fine, 1, steps);

  const std::int64_t kPaths = 10000;
  const ModeMcResult mc = sample_coupled_mode_variance(
      coarse, fine, 1, {steps}, 20260819, kPaths, g_workers);
  const double mean = mc.estimates[0].mean;
  const double se = mc.estimates[0].std_error;

  // NOTE: this comparison is known to sit ~6.4 sigma below the
  // continuum value: a reference at N = 16n under-measures the error
  // by a first-order (~ -1.03 n/N) bias because the reference's own
  // error is positively correlated with the coarse one. The simulation
  // does match its exact closed-form prediction (printed as z_coupled),
  // and that closed form converges to exact_mode_variance as N grows
  // (pinned to 1e-4 by Richardson extrapolation in the unit tests).
  // The pass gate is kept at the face-value 3 sigma anyway.
  Outcome out;
  out.require(std::abs(mean - exact) <= 3.0 * se,
              "mc=" + num(mean) + " exact=" + num(exact) +
                  " z_exact=" + num((mean - exact) / se));
  out.require(std::abs(mean - coupled) <= 3.0 * se,
              "coupled=" + num(coupled) + " z_coupled=" +
                  num((mean - coupled) / se));
  return out;
}

// ---------------------------------------------------------------------
// 5. nonlinear headline rates (Allen-Cahn, median over 20 seeds)
// ---------------------------------------------------------------------
Outcome criterion5() {
  const json& report = rates_report();
  const double s_theta = report["fits"]["theta=-0.4"]["slope"].get<double>();
  const double s_zero = report["fits"]["theta=0"]["slope"].get<double>();

  Outcome out;
  out.require(s_theta <= -0.70,
              "slope(theta=-0.4)=" + num(s_theta) + " <= -0.70");
  out.require(s_zero >= -0.65 && s_zero <= -0.35,
              "slope(theta=0)=" + num(s_zero) + " in [-0.65,-0.35]");
  out.require(s_theta - s_zero <= -0.25,
              "gap=" + num(s_theta - s_zero) + " <= -0.25");
  return out;
}

// ---------------------------------------------------------------------
// 6. exact-identity suite
// ---------------------------------------------------------------------
Outcome criterion6() {
  Outcome out;
  int failed = 0, total = 0;
  for (const CheckResult& r : identity_checks()) {
    ++total;
    if (!r.pass) {
      ++failed;
      out.require(false, r.name + " measured=" + num(r.measured));
    }
  }
  out.require(failed == 0, std::to_string(total - failed) + "/" +
                               std::to_string(total) + " identities hold");
  return out;
}

// ---------------------------------------------------------------------
// 7. inequality no-growth suite
// ---------------------------------------------------------------------
Outcome criterion7() {
  Outcome out;
  int failed = 0, total = 0;
  for (const CheckResult& r : growth_checks()) {
    ++total;
    if (!r.pass) {
      ++failed;
      out.require(false, r.name + " growth=" + num(r.measured));
    }
  }
  out.require(failed == 0, std::to_string(total - failed) + "/" +
                               std::to_string(total) +
                               " constants within factor 2");
  return out;
}

// ---------------------------------------------------------------------
// 8. a-priori monitors on the criterion-5 runs
// ---------------------------------------------------------------------
Outcome criterion8() {
  const json& report = rates_report();
  Outcome out;
  double ratio32 = 0.0, ratio64 = 0.0;
  for (const json& lvl : report["per_level"]) {
    const int n = lvl["n"].get<int>();
    const int omega = lvl["omega_count"].get<int>();
    const int seeds = report["seeds"].get<int>();
    out.require(20 * omega >= 19 * seeds,
                "omega(n=" + std::to_string(n) + ")=" + std::to_string(omega) +
                    "/" + std::to_string(seeds) + " >= 19/20");
    if (n == 32) ratio32 = lvl["monitor_ratio_max"].get<double>();
    if (n == 64) ratio64 = lvl["monitor_ratio_max"].get<double>();
  }
  out.require(ratio32 > 0.0 && ratio64 <= 2.0 * ratio32,
              "ratio growth 32->64 = " + num(ratio64 / ratio32) + " <= 2");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
      g_workers = std::atoi(argv[++i]);
      if (g_workers < 1) g_workers = 1;
    } else {
      const int c = std::atoi(argv[i]);
      if (c < 1 || c > 8) {
        std::fprintf(stderr, "usage: acceptance [--workers N] [1..8 ...]\n");
        return 64;
      }
      wanted.push_back(c);
    }
  }
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8};

  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Entry table[] = {
      {1, "linear oracle rate", criterion1},
      {2, "rate-1 saturation", criterion2},
      {3, "uniform mode bound", criterion3},
      {4, "oracle vs Monte Carlo", criterion4},
      {5, "nonlinear Besov rates", criterion5},
      {6, "exact identities", criterion6},
      {7, "inequality no-growth", criterion7},
      {8, "a-priori monitors", criterion8},
  };

  int failures = 0;
  for (const Entry& e : table) {
    bool run_this = false;
    for (int w : wanted) run_this = run_this || (w == e.id);
    if (!run_this) continue;
    const double t0 = now_seconds();
    Outcome out;
    try {
      out = e.fn();
    } catch (const std::exception& ex) {
      out.pass = false;
      out.require(false, std::string("exception: ") + ex.what());
    }
    const double dt = now_seconds() - t0;
    std::printf("[%s] criterion %d (%s): %s  [%.1fs]\n",
                out.pass ? "PASS" : "FAIL", e.id, e.name, out.detail.c_str(),
                dt);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
