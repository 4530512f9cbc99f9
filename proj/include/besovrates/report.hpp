#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "besovrates/config.hpp"
#include "besovrates/grid.hpp"
#include "besovrates/scheme.hpp"

namespace besovrates {

// =====================================================================
// Output artifacts. Every writer is deterministic: identical inputs
// give byte-identical files (doubles printed with %.17g, no clocks,
// no locale dependence).
// =====================================================================

struct ErrorRow {
  std::uint64_t seed = 0;
  int n = 0;
  double t = 0.0;
  std::string theta;  // "-0.4", "0", or "Linf" for the sup-norm rows
  double value = 0.0;
};

/// Formats a double the way every artifact does (shortest round-trip
/// via %.17g).
std::string format_double(double v);

void write_errors_csv(const std::string& path,
                      const std::vector<ErrorRow>& rows,
                      const RunConfig& cfg);

/// Wraps the body with {"schema": 1, "version": ..., "config": hash}
/// and writes it with sorted keys.
void write_report_json(const std::string& path, const RunConfig& cfg,
                       const nlohmann::json& body);

struct RatePoint {
  double n = 0.0;
  double error = 0.0;
};

struct RateSeries {
  std::string label;
  std::vector<RatePoint> points;
  double slope = 0.0;      // fitted, drawn as a guide line
  double intercept = 0.0;  // log-space intercept of the fit
};

/// Hand-rolled log-log SVG scatter with fitted guide lines. Self
/// contained, no timestamps.
void write_rates_svg(const std::string& path,
                     const std::vector<RateSeries>& series,
                     const RunConfig& cfg);

void write_provenance(const std::string& path, const RunConfig& cfg);

/// Snapshot CSV: x,value rows for one grid function.
void write_snapshot_csv(const std::string& path, const GridFunction& f);

// Compact binary dump of a path's checkpoints.
// Layout (little-endian): magic "BSRT", u32 version = 1, u32 n,
// u32 checkpoint count, then per checkpoint a f64 time followed by
// 2n f64 state values.
void write_state_dump(const std::string& path, const PathRecord& rec);

struct StateDump {
  int n = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

StateDump read_state_dump(const std::string& path);

}  // namespace besovrates
