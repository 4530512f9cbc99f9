#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace besovrates {

// =====================================================================
// Declarative run configuration (JSON file). Validation gathers every
// violation before throwing, so a bad config reports all its problems
// in one pass.
// =====================================================================

struct RunConfig {
  std::string mode = "rates";  // simulate | rates | linear-oracle |
                               // lower-bound | verify

  // equation
  std::vector<double> reaction = {0.0, 1.0, 0.0, -1.0};  // F(v) = v - v^3
  std::string initial = "sine";                          // sine | zero
  double initial_amplitude = 1.0;

  // discretization
  std::vector<int> levels = {16, 32, 64};
  int reference_multiple = 4;  // N = reference_multiple * max(levels)
  double c = 0.125;

  // horizon and checkpoints: t = i/checkpoint_den, i = 1..checkpoint_count
  std::int64_t horizon_num = 1, horizon_den = 1;
  int checkpoint_den = 16;
  int checkpoint_count = 16;

  // norms
  std::vector<double> theta_list = {-0.4, 0.0};

  // Monte Carlo
  int seeds = 20;
  std::uint64_t base_seed = 20260819;
  int mu = 6;
  double truncation_factor = 0.0;     // 0 disables truncation
  std::string omega_policy = "include";  // include | exclude
  int workers = 1;

  std::string out_dir = "out";

  int reference_n() const;
};

/// Parse + validate a JSON config file. Throws config_error listing
/// every violation.
RunConfig load_config(const std::string& path);

/// Parse + validate from a JSON string (exposed for tests).
RunConfig parse_config_text(const std::string& text);

/// Canonical single-line serialization with sorted keys; the basis of
/// the provenance hash, so its bytes must be stable across runs.
std::string canonical_dump(const RunConfig& cfg);

/// FNV-1a (64-bit) over the canonical dump, rendered as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

extern const char* const kVersion;  // library/CLI version string

}  // namespace besovrates
