#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "csv.hpp"
#include "errors.hpp"

namespace dcpso {

namespace {

double parse_real(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(std::string(value), &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(x)) throw std::invalid_argument("not finite");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key) + ": expected a real number, got '" +
                      std::string(value) + "'");
  }
}

std::int64_t parse_integer(std::string_view key, std::string_view value) {
  std::int64_t x = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" +
                      std::string(value) + "'");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(std::string(key) + ": expected true/false, got '" +
                    std::string(value) + "'");
}

struct KeyEntry {
  const char* key;
  const char* default_value;
  const char* description;
  std::function<void(ExperimentConfig&, std::string_view)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

const std::vector<KeyEntry>& key_table() {
  static const std::vector<KeyEntry> table = [] {
    std::vector<KeyEntry> t;
    auto real_key = [&t](const char* key, const char* def, const char* desc,
                         double ExperimentConfig::*field) {
      t.push_back({key, def, desc,
                   [key, field](ExperimentConfig& c, std::string_view v) {
                     c.*field = parse_real(key, v);
                   },
                   [field](const ExperimentConfig& c) { return format_real(c.*field); }});
    };
    auto int_key = [&t](const char* key, const char* def, const char* desc,
                        int ExperimentConfig::*field) {
      t.push_back({key, def, desc,
                   [key, field](ExperimentConfig& c, std::string_view v) {
                     c.*field = static_cast<int>(parse_integer(key, v));
                   },
                   [field](const ExperimentConfig& c) { return std::to_string(c.*field); }});
    };
    auto bool_key = [&t](const char* key, const char* def, const char* desc,
                         bool ExperimentConfig::*field) {
      t.push_back({key, def, desc,
                   [key, field](ExperimentConfig& c, std::string_view v) {
                     c.*field = parse_bool(key, v);
                   },
                   [field](const ExperimentConfig& c) { return bool_str(c.*field); }});
    };
    auto mpb_real = [&t](const char* key, const char* def, const char* desc,
                         double MpbConfig::*field) {
      t.push_back({key, def, desc,
                   [key, field](ExperimentConfig& c, std::string_view v) {
                     c.mpb.*field = parse_real(key, v);
                   },
                   [field](const ExperimentConfig& c) { return format_real(c.mpb.*field); }});
    };
    auto pso_real = [&t](const char* key, const char* def, const char* desc,
                         double PsoParams::*field) {
      t.push_back({key, def, desc,
                   [key, field](ExperimentConfig& c, std::string_view v) {
                     c.pso.*field = parse_real(key, v);
                   },
                   [field](const ExperimentConfig& c) { return format_real(c.pso.*field); }});
    };

    t.push_back({"mpb.dims", "5", "number of search-space dimensions (D)",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.mpb.dims = static_cast<int>(parse_integer("mpb.dims", v));
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.mpb.dims); }});
    t.push_back({"mpb.peaks", "10", "number of peaks (p)",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.mpb.num_peaks = static_cast<int>(parse_integer("mpb.peaks", v));
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.mpb.num_peaks); }});
    t.push_back({"mpb.bound_low", "0", "lower search-space bound per dimension",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.mpb.bounds.low = parse_real("mpb.bound_low", v);
                 },
                 [](const ExperimentConfig& c) { return format_real(c.mpb.bounds.low); }});
    t.push_back({"mpb.bound_high", "100", "upper search-space bound per dimension",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.mpb.bounds.high = parse_real("mpb.bound_high", v);
                 },
                 [](const ExperimentConfig& c) { return format_real(c.mpb.bounds.high); }});
    mpb_real("mpb.height_min", "30", "lower clamp for peak heights (H)", &MpbConfig::height_min);
    mpb_real("mpb.height_max", "70", "upper clamp for peak heights (H)", &MpbConfig::height_max);
    mpb_real("mpb.initial_height", "50", "height of every peak at t = 0 (I)",
             &MpbConfig::initial_height);
    mpb_real("mpb.width_min", "1", "lower clamp for peak widths (W)", &MpbConfig::width_min);
    mpb_real("mpb.width_max", "12", "upper clamp for peak widths (W)", &MpbConfig::width_max);
    mpb_real("mpb.shift_length", "1", "norm of each per-change location shift (s)",
             &MpbConfig::shift_length);
    mpb_real("mpb.lambda", "0", "correlation between consecutive shifts (lambda)",
             &MpbConfig::lambda);
    mpb_real("mpb.height_severity", "7", "scale of per-change height perturbation",
             &MpbConfig::height_severity);
    mpb_real("mpb.width_severity", "1", "scale of per-change width perturbation",
             &MpbConfig::width_severity);
    t.push_back({"mpb.peak_shape", "sharp",
                 "peak function: sharp (rational) or cone (linear)",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "sharp") c.mpb.shape = PeakShape::kSharp;
                   else if (v == "cone") c.mpb.shape = PeakShape::kCone;
                   else throw ConfigError("mpb.peak_shape: expected sharp or cone, got '" +
                                          std::string(v) + "'");
                 },
                 [](const ExperimentConfig& c) {
                   return std::string(c.mpb.shape == PeakShape::kSharp ? "sharp" : "cone");
                 }});

    pso_real("pso.w_max", "0.6", "inertia weight at the start of a schedule", &PsoParams::w_max);
    pso_real("pso.w_min", "0.3", "inertia weight at the end of a schedule", &PsoParams::w_min);
    pso_real("pso.eta1", "1.7", "cognitive acceleration constant", &PsoParams::eta1);
    pso_real("pso.eta2", "1.7", "social acceleration constant", &PsoParams::eta2);
    t.push_back({"pso.v_max", "auto",
                 "per-dimension velocity clamp; auto = half the domain width",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "auto") c.pso.v_max = 0.0;
                   else c.pso.v_max = parse_real("pso.v_max", v);
                 },
                 [](const ExperimentConfig& c) {
                   return c.pso.v_max == 0.0 ? std::string("auto") : format_real(c.pso.v_max);
                 }});

    int_key("swarm_size", "70", "cradle swarm size (M)", &ExperimentConfig::swarm_size);
    int_key("max_subsize", "3", "maximum particles per cluster (N)",
            &ExperimentConfig::max_subsize);
    real_key("overlap_threshold", "0.3", "overlap ratio that triggers merging (R)",
             &ExperimentConfig::overlap_threshold);
    t.push_back({"overlap_rule", "greater",
                 "merge when the overlap ratio is greater/less than the threshold",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "greater") c.overlap_merge_on_greater = true;
                   else if (v == "less") c.overlap_merge_on_greater = false;
                   else throw ConfigError("overlap_rule: expected greater or less, got '" +
                                          std::string(v) + "'");
                 },
                 [](const ExperimentConfig& c) {
                   return std::string(c.overlap_merge_on_greater ? "greater" : "less");
                 }});
    real_key("convergence_radius", "1e-04",
             "clusters with a smaller radius are archived as converged",
             &ExperimentConfig::convergence_radius);
    bool_key("diversity", "true",
             "worst-cluster dimension recombination (false = CPSO-style baseline)",
             &ExperimentConfig::diversity_enabled);
    bool_key("confidence", "false",
             "require a recombined position to recur before relocating",
             &ExperimentConfig::confidence_enabled);
    real_key("relocation_spread", "0.5",
             "per-dimension uniform noise applied to relocated particles",
             &ExperimentConfig::relocation_spread);
    t.push_back({"lbest_learn_trigger", "pbest",
                 "event that starts dimension-wise lbest learning: pbest (any "
                 "pbest improvement) or lbest (particle beats the cluster "
                 "lbest)",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "lbest") c.lbest_learn_on_lbest_improvement = true;
                   else if (v == "pbest") c.lbest_learn_on_lbest_improvement = false;
                   else throw ConfigError("lbest_learn_trigger: expected lbest or pbest, got '" +
                                          std::string(v) + "'");
                 },
                 [](const ExperimentConfig& c) {
                   return std::string(c.lbest_learn_on_lbest_improvement ? "lbest" : "pbest");
                 }});
    int_key("lbest_learn_cap", "2",
            "triggering particles per cluster per iteration that run lbest "
            "learning (0 = no cap)",
            &ExperimentConfig::lbest_learn_cap);

    t.push_back({"change_frequency", "10000", "evaluations per environment (U_cf)",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.change_frequency = parse_integer("change_frequency", v);
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.change_frequency); }});
    int_key("environments", "100", "number of environment changes per run",
            &ExperimentConfig::environments);
    int_key("runs", "50", "independent runs per experiment", &ExperimentConfig::runs);
    t.push_back({"base_seed", "1", "seed of run 0; run i uses base_seed + i",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.base_seed = static_cast<std::uint64_t>(parse_integer("base_seed", v));
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.base_seed); }});
    real_key("peak_probe_radius", "0.5",
             "floor probe radius when counting found peaks",
             &ExperimentConfig::peak_probe_radius);
    return t;
  }();
  return table;
}

const KeyEntry& find_key(std::string_view key) {
  for (const KeyEntry& entry : key_table()) {
    if (key == entry.key) return entry;
  }
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

void require(bool ok, const char* message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

double resolved_v_max(const ExperimentConfig& config) {
  if (config.pso.v_max > 0.0) return config.pso.v_max;
  return 0.5 * config.mpb.bounds.width();
}

void apply_config_override(ExperimentConfig& config, std::string_view key,
                           std::string_view value) {
  find_key(key).set(config, value);
}

std::string get_config_value(const ExperimentConfig& config, std::string_view key) {
  return find_key(key).get(config);
}

void validate_config(const ExperimentConfig& config) {
  require(config.mpb.dims >= 1, "mpb.dims: must be >= 1");
  require(config.mpb.num_peaks >= 1, "mpb.peaks: must be >= 1");
  require(config.mpb.bounds.low < config.mpb.bounds.high,
          "mpb.bound_low/mpb.bound_high: bounds must be non-degenerate");
  require(config.mpb.height_min <= config.mpb.height_max,
          "mpb.height_min/mpb.height_max: inverted range");
  require(config.mpb.initial_height >= config.mpb.height_min &&
              config.mpb.initial_height <= config.mpb.height_max,
          "mpb.initial_height: must lie within [mpb.height_min, mpb.height_max]");
  require(config.mpb.width_min <= config.mpb.width_max,
          "mpb.width_min/mpb.width_max: inverted range");
  require(config.mpb.shift_length >= 0.0, "mpb.shift_length: must be >= 0");
  require(config.mpb.lambda >= 0.0 && config.mpb.lambda <= 1.0,
          "mpb.lambda: must lie in [0, 1]");
  require(config.mpb.height_severity >= 0.0, "mpb.height_severity: must be >= 0");
  require(config.mpb.width_severity >= 0.0, "mpb.width_severity: must be >= 0");

  require(config.pso.w_min >= 0.0, "pso.w_min: must be >= 0");
  require(config.pso.w_min <= config.pso.w_max, "pso.w_min: must be <= pso.w_max");
  require(config.pso.w_max <= 1.0, "pso.w_max: must be <= 1");
  require(config.pso.eta1 >= 0.0, "pso.eta1: must be >= 0");
  require(config.pso.eta2 >= 0.0, "pso.eta2: must be >= 0");
  require(config.pso.v_max >= 0.0, "pso.v_max: must be positive or auto");
  require(resolved_v_max(config) > 0.0, "pso.v_max: must resolve to a positive value");

  require(config.swarm_size >= 2, "swarm_size: must be >= 2");
  require(config.max_subsize >= 2, "max_subsize: must be >= 2");
  require(config.overlap_threshold >= 0.0 && config.overlap_threshold <= 1.0,
          "overlap_threshold: must lie in [0, 1]");
  require(config.convergence_radius > 0.0, "convergence_radius: must be > 0");
  require(config.relocation_spread >= 0.0, "relocation_spread: must be >= 0");
  require(config.lbest_learn_cap >= 0, "lbest_learn_cap: must be >= 0");

  require(config.change_frequency >= config.swarm_size,
          "change_frequency: must be >= swarm_size");
  require(config.environments >= 1, "environments: must be >= 1");
  require(config.runs >= 1, "runs: must be >= 1");
  require(config.peak_probe_radius >= 0.0, "peak_probe_radius: must be >= 0");
}

ExperimentConfig parse_config_text(std::string_view text) {
  ExperimentConfig config;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;

    const std::size_t comment = line.find('#');
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    const auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_number) + ": empty key");
    }
    apply_config_override(config, key, value);
  }
  validate_config(config);
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config file: " + path);
  return parse_config_text(buffer.str());
}

std::vector<ConfigKeyInfo> config_key_table() {
  std::vector<ConfigKeyInfo> out;
  out.reserve(key_table().size());
  for (const KeyEntry& entry : key_table()) {
    out.push_back({entry.key, entry.default_value, entry.description});
  }
  return out;
}

}  // namespace dcpso
