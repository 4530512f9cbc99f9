#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "besovrates/config.hpp"
#include "besovrates/report.hpp"
#include "besovrates/scheme.hpp"

namespace besovrates {

// =====================================================================
// Experiment drivers behind the CLI modes. Every driver is a pure
// function of the config (workers only change wall time) and returns
// the artifacts for the writers.
// =====================================================================

/// Pointwise error (restriction of the fine snapshot) - (coarse
/// snapshot) on the coarse grid, at checkpoint index k.
GridFunction error_field(const PathRecord& fine, const PathRecord& coarse,
                         std::size_t checkpoint);

/// Initial data named by the config ("sine" -> amplitude * sin(2 pi x),
/// "zero" -> 0), sampled per level.
InitialData make_initial(const RunConfig& cfg);

struct Artifacts {
  nlohmann::json report;
  std::vector<ErrorRow> rows;
  std::vector<RateSeries> series;
};

/// Coupled nonlinear Monte Carlo rate study (criterion data for the
/// headline rates and the a priori monitors).
Artifacts run_rates(const RunConfig& cfg);

/// Exact-oracle Besov bound scan over the configured levels.
Artifacts run_linear_oracle(const RunConfig& cfg);

/// First-mode saturation and uniform mode-bound scan.
Artifacts run_lower_bound(const RunConfig& cfg);

/// One coupled path, dumped as binary checkpoints + final snapshot CSVs
/// into out_dir.
Artifacts run_simulate(const RunConfig& cfg, const std::string& out_dir);

}  // namespace besovrates
