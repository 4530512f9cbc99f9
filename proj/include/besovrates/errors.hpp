#pragma once

#include <stdexcept>
#include <string>

namespace besovrates {

/// Invalid run configuration (bad grid parameters, malformed config file, ...).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Scheme state left the representable range (NaN or overflow) during a solve.
struct blow_up_error : std::runtime_error {
  blow_up_error(const std::string& what, double time, double value)
      : std::runtime_error(what), time_of_blow_up(time), offending_value(value) {}
  double time_of_blow_up;
  double offending_value;
};

/// Violation of the multi-level noise coupling contract.
struct coupling_error : std::runtime_error {
  explicit coupling_error(const std::string& what) : std::runtime_error(what) {}
};

/// Failure writing or reading an output artifact.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace besovrates
