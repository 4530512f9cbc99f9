#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "besovrates/checks.hpp"
#include "besovrates/config.hpp"
#include "besovrates/errors.hpp"
#include "besovrates/experiments.hpp"
#include "besovrates/report.hpp"

namespace {

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BESOV_RATES_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 0;  // keep the config value
}

void emit_error_json(const std::string& kind, const std::string& message) {
  nlohmann::json err;
  err["error"] = kind;
  err["message"] = message;
  std::cerr << err.dump() << std::endl;
}

int run_verify() {
  const std::vector<besovrates::CheckResult> results = besovrates::all_checks();
  bool ok = true;
  for (const besovrates::CheckResult& r : results) {
    std::printf("[%s] %-24s measured=%-12.6g threshold=%g\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                r.threshold);
    ok = ok && r.pass;
  }
  std::printf("%zu checks, %s\n", results.size(),
              ok ? "all passed" : "FAILURES PRESENT");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rate laboratory for the explicit stochastic heat scheme"};
  std::string mode;
  std::string config_path;
  int seeds = 0;
  int workers = 0;
  std::string out_dir;

  app.add_option("mode", mode, "run mode")
      ->required()
      ->check(CLI::IsMember(
          {"simulate", "rates", "linear-oracle", "lower-bound", "verify"}));
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seeds", seeds, "override the Monte Carlo seed count")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", workers,
                 "worker threads (fallback: BESOV_RATES_WORKERS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "output directory");
  CLI11_PARSE(app, argc, argv);

  try {
    if (mode == "verify") return run_verify();

    besovrates::RunConfig cfg;
    if (!config_path.empty()) cfg = besovrates::load_config(config_path);
    cfg.mode = mode;
    if (seeds > 0) cfg.seeds = seeds;
    if (const int w = resolve_workers(workers); w > 0) cfg.workers = w;
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    besovrates::Artifacts art;
    if (mode == "rates") {
      art = besovrates::run_rates(cfg);
    } else if (mode == "linear-oracle") {
      art = besovrates::run_linear_oracle(cfg);
    } else if (mode == "lower-bound") {
      art = besovrates::run_lower_bound(cfg);
    } else {
      art = besovrates::run_simulate(cfg, cfg.out_dir);
    }

    std::filesystem::create_directories(cfg.out_dir);
    besovrates::write_report_json(cfg.out_dir + "/report.json", cfg,
                                  art.report);
    if (!art.rows.empty())
      besovrates::write_errors_csv(cfg.out_dir + "/errors.csv", art.rows, cfg);
    if (!art.series.empty())
      besovrates::write_rates_svg(cfg.out_dir + "/rates.svg", art.series, cfg);
    besovrates::write_provenance(cfg.out_dir + "/provenance.txt", cfg);

    if (art.report.contains("fits")) {
      for (const auto& [key, fit] : art.report["fits"].items()) {
        std::printf("fit %-24s slope=%8.4f  r2=%.4f\n", key.c_str(),
                    fit["slope"].get<double>(),
                    fit["r_squared"].get<double>());
      }
    }
    std::printf("artifacts written to %s\n", cfg.out_dir.c_str());
    return 0;
  } catch (const besovrates::config_error& e) {
    emit_error_json("config", e.what());
    return 2;
  } catch (const besovrates::blow_up_error& e) {
    emit_error_json("blow-up", e.what());
    return 3;
  } catch (const besovrates::io_error& e) {
    emit_error_json("io", e.what());
    return 4;
  } catch (const std::exception& e) {
    emit_error_json("internal", e.what());
    return 1;
  }
}
