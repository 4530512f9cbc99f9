#include "besovrates/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "besovrates/errors.hpp"
#include "besovrates/grid.hpp"
#include "besovrates/scheme.hpp"

namespace besovrates {

const char* const kVersion = "0.1.0";

int RunConfig::reference_n() const {
  int top = 0;
  for (int n : levels) top = std::max(top, n);
  return reference_multiple * top;
}

namespace {

using nlohmann::json;

void read_into(const json& j, RunConfig& cfg, std::vector<std::string>& bad) {
  auto fetch = [&](const char* key, auto& slot) {
    if (!j.contains(key)) return;
    try {
      j.at(key).get_to(slot);
    } catch (const json::exception&) {
      bad.push_back(std::string(key) + ": wrong type");
    }
  };
  fetch("mode", cfg.mode);
  if (j.contains("reaction")) {
    if (j.at("reaction").is_string()) {
      const std::string name = j.at("reaction").get<std::string>();
      if (name == "zero") {
        cfg.reaction.clear();
      } else if (name == "allen-cahn") {
        cfg.reaction = {0.0, 1.0, 0.0, -1.0};
      } else {
        bad.push_back("reaction: unknown name '" + name + "'");
      }
    } else {
      fetch("reaction", cfg.reaction);
    }
  }
  fetch("initial", cfg.initial);
  fetch("initial_amplitude", cfg.initial_amplitude);
  fetch("levels", cfg.levels);
  fetch("reference_multiple", cfg.reference_multiple);
  fetch("c", cfg.c);
  fetch("horizon_num", cfg.horizon_num);
  fetch("horizon_den", cfg.horizon_den);
  fetch("checkpoint_den", cfg.checkpoint_den);
  fetch("checkpoint_count", cfg.checkpoint_count);
  fetch("theta_list", cfg.theta_list);
  fetch("seeds", cfg.seeds);
  fetch("base_seed", cfg.base_seed);
  fetch("mu", cfg.mu);
  fetch("truncation_factor", cfg.truncation_factor);
  fetch("omega_policy", cfg.omega_policy);
  fetch("workers", cfg.workers);
  fetch("out_dir", cfg.out_dir);

  static const char* known[] = {
      "mode",           "reaction",       "initial",
      "initial_amplitude", "levels",      "reference_multiple",
      "c",              "horizon_num",    "horizon_den",
      "checkpoint_den", "checkpoint_count", "theta_list",
      "seeds",          "base_seed",      "mu",
      "truncation_factor", "omega_policy", "workers",
      "out_dir"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) bad.push_back("unknown key '" + it.key() + "'");
  }
}

void validate(const RunConfig& cfg, std::vector<std::string>& bad) {
  static const char* modes[] = {"simulate", "rates", "linear-oracle",
                                "lower-bound", "verify"};
  bool mode_ok = false;
  for (const char* m : modes) mode_ok = mode_ok || cfg.mode == m;
  if (!mode_ok) bad.push_back("mode: must be one of simulate, rates, "
                              "linear-oracle, lower-bound, verify");

  Polynomial f{cfg.reaction};
  try {
    validate_reaction(f);
  } catch (const config_error& e) {
    bad.push_back(std::string("reaction: ") + e.what());
  }

  if (cfg.initial != "sine" && cfg.initial != "zero") {
    bad.push_back("initial: must be 'sine' or 'zero'");
  }
  if (!std::isfinite(cfg.initial_amplitude)) {
    bad.push_back("initial_amplitude: must be finite");
  }

  if (cfg.levels.empty()) {
    bad.push_back("levels: need at least one level");
  }
  for (std::size_t i = 0; i < cfg.levels.size(); ++i) {
    const int n = cfg.levels[i];
    if (n < 2) bad.push_back("levels: every n must be >= 2");
    if (n >= 2 && (n & (n - 1)) != 0) {
      bad.push_back("levels: every n must be a power of two");
    }
    if (i > 0 && cfg.levels[i] <= cfg.levels[i - 1]) {
      bad.push_back("levels: must be strictly ascending");
    }
  }
  if (cfg.reference_multiple < 1 ||
      (cfg.reference_multiple & (cfg.reference_multiple - 1)) != 0) {
    bad.push_back("reference_multiple: must be a power of two >= 1");
  }

  if (!(cfg.c > 0.0 && cfg.c <= 0.125)) {
    bad.push_back("c: must lie in (0, 1/8]");
  } else {
    for (int n : cfg.levels) {
      if (n < 2) continue;
      const double raw = 4.0 * double(n) * double(n) / cfg.c;
      if (std::abs(raw - std::nearbyint(raw)) > 1e-6) {
        bad.push_back("c: (2n)^2/c must be an integer at n=" +
                      std::to_string(n));
      }
    }
  }

  if (cfg.horizon_den <= 0 || cfg.horizon_num <= 0) {
    bad.push_back("horizon: must be a positive rational");
  } else if (cfg.horizon_num > cfg.horizon_den) {
    bad.push_back("horizon: must be <= 1 (monitors run on [0,1])");
  }
  if (cfg.checkpoint_den <= 0 || cfg.checkpoint_count <= 0) {
    bad.push_back("checkpoints: den and count must be positive");
  } else if (cfg.horizon_den > 0 && cfg.horizon_num > 0 &&
             double(cfg.checkpoint_count) / cfg.checkpoint_den >
                 double(cfg.horizon_num) / cfg.horizon_den + 1e-12) {
    bad.push_back("checkpoints: last one exceeds the horizon");
  }

  for (double th : cfg.theta_list) {
    if (!(th > -0.5 && th <= 0.0)) {
      bad.push_back("theta_list: every theta must lie in (-1/2, 0]");
    }
  }
  if (cfg.theta_list.empty()) bad.push_back("theta_list: must not be empty");

  if (cfg.seeds < 1) bad.push_back("seeds: must be >= 1");
  if (cfg.mu <= 0 || cfg.mu % 2 != 0) {
    bad.push_back("mu: must be a positive even integer");
  } else if (!f.is_zero() && cfg.mu <= f.degree()) {
    bad.push_back("mu: must exceed the reaction degree");
  }
  if (cfg.truncation_factor < 0.0) {
    bad.push_back("truncation_factor: must be >= 0");
  }
  if (cfg.omega_policy != "include" && cfg.omega_policy != "exclude") {
    bad.push_back("omega_policy: must be 'include' or 'exclude'");
  }
  if (cfg.workers < 1) bad.push_back("workers: must be >= 1");
  if (cfg.out_dir.empty()) bad.push_back("out_dir: must not be empty");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config must be a JSON object");

  RunConfig cfg;
  std::vector<std::string> bad;
  read_into(j, cfg, bad);
  // unknown keys and type errors leave defaults in place, so semantic
  // validation still reports real problems alongside them
  validate(cfg, bad);
  if (!bad.empty()) {
    std::string msg = "invalid config:";
    for (const auto& b : bad) msg += "\n  - " + b;
    throw config_error(msg);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string canonical_dump(const RunConfig& cfg) {
  // nlohmann::json objects keep keys sorted, so dump() is canonical
  json j;
  j["base_seed"] = cfg.base_seed;
  j["c"] = cfg.c;
  j["checkpoint_count"] = cfg.checkpoint_count;
  j["checkpoint_den"] = cfg.checkpoint_den;
  j["horizon_den"] = cfg.horizon_den;
  j["horizon_num"] = cfg.horizon_num;
  j["initial"] = cfg.initial;
  j["initial_amplitude"] = cfg.initial_amplitude;
  j["levels"] = cfg.levels;
  j["mode"] = cfg.mode;
  j["mu"] = cfg.mu;
  j["omega_policy"] = cfg.omega_policy;
  j["reaction"] = cfg.reaction;
  j["reference_multiple"] = cfg.reference_multiple;
  j["seeds"] = cfg.seeds;
  j["theta_list"] = cfg.theta_list;
  j["truncation_factor"] = cfg.truncation_factor;
  // workers and out_dir are execution details: they may never change
  // result bytes, so they stay out of the canonical form and the hash
  return j.dump();
}

std::string config_hash(const RunConfig& cfg) {
  const std::string dump = canonical_dump(cfg);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 1099511628211ull;  // FNV prime
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace besovrates
