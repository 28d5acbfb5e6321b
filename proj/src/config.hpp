#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mpb.hpp"
#include "swarm.hpp"

namespace dcpso {

// Everything one experiment needs: benchmark settings, PSO constants,
// redundancy-control thresholds, the diversity mechanism switches, and the
// evaluation budget. Parsed from a flat `key = value` text document; every
// field has a documented default (see the key table in config.cpp).
struct ExperimentConfig {
  MpbConfig mpb;
  PsoParams pso{0.6, 0.3, 1.7, 1.7, /*v_max=*/0.0};  // v_max 0 = auto

  int swarm_size = 70;            // M: cradle swarm size
  int max_subsize = 3;            // N: cluster capacity
  double overlap_threshold = 0.3; // R: overlap ratio that triggers merging.
                                  // With small clusters the member-count
                                  // ratio quantizes to 1/N steps; 0.3 fires
                                  // as soon as both clusters hold one of the
                                  // other's particles, which is what keeps
                                  // redundant trackers merged.
  bool overlap_merge_on_greater = true;
  double convergence_radius = 1e-4;
  bool diversity_enabled = true;  // false = CPSO-style ablation baseline
  bool confidence_enabled = false;
  double relocation_spread = 0.5;
  bool lbest_learn_on_lbest_improvement = false;
                                  // true: learning fires only when a particle
                                  // beats the cluster lbest; false: on every
                                  // pbest improvement
  int lbest_learn_cap = 2;        // triggering particles per cluster per
                                  // iteration; 0 = no cap. Uncapped learning
                                  // can burn most of the evaluation budget
                                  // when many particles improve at once.

  std::int64_t change_frequency = 10000;  // U_cf: evaluations per environment
  int environments = 100;
  int runs = 50;
  std::uint64_t base_seed = 1;
  double peak_probe_radius = 0.5;  // floor radius when counting found peaks
};

// v_max resolved against the domain: explicit positive value, else half the
// domain width.
double resolved_v_max(const ExperimentConfig& config);

// Parses a key-value document ('#' comments, blank lines, `key = value`).
// Unknown keys and malformed values raise ConfigError naming the key.
// Unset keys keep their defaults. The result is validated.
ExperimentConfig parse_config_text(std::string_view text);

// Same, reading from a file. Missing file raises IoError.
ExperimentConfig parse_config_file(const std::string& path);

// Applies one key=value override; raises ConfigError for unknown keys or
// unparsable values. Does not re-validate (call validate_config afterwards).
void apply_config_override(ExperimentConfig& config, std::string_view key,
                           std::string_view value);

// Current value of one key, serialized the way the config file would spell
// it. Raises ConfigError for unknown keys.
std::string get_config_value(const ExperimentConfig& config, std::string_view key);

// Checks every documented constraint; raises ConfigError naming the
// offending key.
void validate_config(const ExperimentConfig& config);

// All known keys in documentation order, with defaults and descriptions.
struct ConfigKeyInfo {
  std::string key;
  std::string default_value;
  std::string description;
};
std::vector<ConfigKeyInfo> config_key_table();

}  // namespace dcpso
