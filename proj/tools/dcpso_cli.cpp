// Command-line front end for the dcpso shared library. Talks to the core
// exclusively through the C API in dcpso.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcpso.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct ConfigDeleter {
  void operator()(dcpso_config* c) const { dcpso_config_free(c); }
};
struct ResultDeleter {
  void operator()(dcpso_result* r) const { dcpso_result_free(r); }
};
using ConfigPtr = std::unique_ptr<dcpso_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<dcpso_result, ResultDeleter>;

int exit_code_for(dcpso_status status) {
  switch (status) {
    case DCPSO_OK: return kExitOk;
    case DCPSO_ERR_CONFIG: return kExitConfig;
    case DCPSO_ERR_IO: return kExitIo;
    default: return 1;
  }
}

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::int64_t seed = -1;   // -1 = keep the config's base_seed
  int runs = -1;            // -1 = keep the config's runs
  std::string ablation = "config";  // config|dcpso|cpso|both
};

void add_common_options(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--config", args->config_path,
                  "experiment config file (key = value); defaults when omitted")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args->out_dir, "output directory for metrics files")
      ->capture_default_str();
  cmd->add_option("--seed", args->seed, "override base_seed")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--runs", args->runs, "override the number of runs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--ablation", args->ablation,
                  "variant to execute: dcpso (diversity on), cpso (diversity "
                  "off), both, or config (honor the config file)")
      ->check(CLI::IsMember({"config", "dcpso", "cpso", "both"}))
      ->capture_default_str();
}

// Loads the config and applies CLI overrides. Returns kExitOk or an exit code.
int make_config(const CommonArgs& args, ConfigPtr* out) {
  char err[512] = {0};
  dcpso_config* raw = nullptr;
  if (args.config_path.empty()) {
    if (dcpso_config_create(&raw) != DCPSO_OK) {
      std::fprintf(stderr, "error: could not allocate configuration\n");
      return 1;
    }
  } else {
    const dcpso_status status =
        dcpso_config_load(args.config_path.c_str(), &raw, err, sizeof(err));
    if (status != DCPSO_OK) {
      std::fprintf(stderr, "error: %s\n", err);
      return exit_code_for(status);
    }
  }
  out->reset(raw);

  auto set = [&](const char* key, const std::string& value) {
    const dcpso_status status =
        dcpso_config_set(out->get(), key, value.c_str(), err, sizeof(err));
    if (status != DCPSO_OK) {
      std::fprintf(stderr, "error: %s\n", err);
      return exit_code_for(status);
    }
    return kExitOk;
  };
  if (args.seed >= 0) {
    if (const int rc = set("base_seed", std::to_string(args.seed)); rc != kExitOk)
      return rc;
  }
  if (args.runs >= 0) {
    if (const int rc = set("runs", std::to_string(args.runs)); rc != kExitOk)
      return rc;
  }
  return kExitOk;
}

int ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create output directory '%s': %s\n",
                 out_dir.c_str(), ec.message().c_str());
    return kExitIo;
  }
  return kExitOk;
}

// Variants requested by --ablation: (tag, diversity flag). An empty tag
// means filenames stay unsuffixed.
std::vector<std::pair<std::string, std::string>> variants_for(
    const std::string& ablation) {
  if (ablation == "dcpso") return {{"", "true"}};
  if (ablation == "cpso") return {{"", "false"}};
  if (ablation == "both") return {{"_dcpso", "true"}, {"_cpso", "false"}};
  return {{"", ""}};  // honor the config file
}

int run_one_experiment(const dcpso_config* config, ResultPtr* out) {
  char err[512] = {0};
  dcpso_result* raw = nullptr;
  const dcpso_status status = dcpso_experiment_run(config, &raw, err, sizeof(err));
  if (status != DCPSO_OK) {
    std::fprintf(stderr, "error: %s\n", err);
    return exit_code_for(status);
  }
  out->reset(raw);
  return kExitOk;
}

int write_csv(dcpso_status status, const char* err) {
  if (status != DCPSO_OK) {
    std::fprintf(stderr, "error: %s\n", err);
    return exit_code_for(status);
  }
  return kExitOk;
}

int command_run(const CommonArgs& args) {
  ConfigPtr config;
  if (const int rc = make_config(args, &config); rc != kExitOk) return rc;
  if (const int rc = ensure_out_dir(args.out_dir); rc != kExitOk) return rc;

  char err[512] = {0};
  for (const auto& [tag, diversity] : variants_for(args.ablation)) {
    if (!diversity.empty()) {
      const dcpso_status status =
          dcpso_config_set(config.get(), "diversity", diversity.c_str(), err, sizeof(err));
      if (status != DCPSO_OK) {
        std::fprintf(stderr, "error: %s\n", err);
        return exit_code_for(status);
      }
    }
    ResultPtr result;
    if (const int rc = run_one_experiment(config.get(), &result); rc != kExitOk)
      return rc;

    const std::string per_change = (fs::path(args.out_dir) / ("per_change" + tag + ".csv")).string();
    const std::string summary = (fs::path(args.out_dir) / ("summary" + tag + ".csv")).string();
    if (const int rc = write_csv(dcpso_write_per_change_csv(result.get(), per_change.c_str(),
                                                            err, sizeof(err)), err);
        rc != kExitOk)
      return rc;
    const dcpso_result* single[] = {result.get()};
    if (const int rc = write_csv(dcpso_write_summary_csv(single, 1, summary.c_str(),
                                                         err, sizeof(err)), err);
        rc != kExitOk)
      return rc;

    std::printf("%s: offline error %.4f +/- %.4f, peaks found %.2f (%d runs)\n",
                tag.empty() ? "result" : tag.c_str() + 1,
                dcpso_result_offline_error_mean(result.get()),
                dcpso_result_offline_error_stddev(result.get()),
                dcpso_result_peaks_found_mean(result.get()),
                dcpso_result_runs(result.get()));
  }
  return kExitOk;
}

int command_grid(const CommonArgs& args) {
  static const int kSwarmSizes[] = {10, 30, 50, 70, 100};
  static const int kSubsizes[] = {2, 3, 4, 5, 7};

  ConfigPtr config;
  if (const int rc = make_config(args, &config); rc != kExitOk) return rc;
  if (const int rc = ensure_out_dir(args.out_dir); rc != kExitOk) return rc;

  char err[512] = {0};
  for (const auto& [tag, diversity] : variants_for(args.ablation)) {
    if (!diversity.empty()) {
      const dcpso_status status =
          dcpso_config_set(config.get(), "diversity", diversity.c_str(), err, sizeof(err));
      if (status != DCPSO_OK) {
        std::fprintf(stderr, "error: %s\n", err);
        return exit_code_for(status);
      }
    }

    std::vector<ResultPtr> results;
    for (const int m : kSwarmSizes) {
      for (const int n : kSubsizes) {
        auto set_cell = [&](const char* key, int value) {
          const dcpso_status status = dcpso_config_set(
              config.get(), key, std::to_string(value).c_str(), err, sizeof(err));
          if (status != DCPSO_OK) {
            std::fprintf(stderr, "error: %s\n", err);
            return exit_code_for(status);
          }
          return kExitOk;
        };
        if (const int rc = set_cell("swarm_size", m); rc != kExitOk) return rc;
        if (const int rc = set_cell("max_subsize", n); rc != kExitOk) return rc;

        ResultPtr result;
        if (const int rc = run_one_experiment(config.get(), &result); rc != kExitOk)
          return rc;

        const std::string per_change =
            (fs::path(args.out_dir) /
             ("per_change_M" + std::to_string(m) + "_N" + std::to_string(n) + tag + ".csv"))
                .string();
        if (const int rc = write_csv(dcpso_write_per_change_csv(result.get(), per_change.c_str(),
                                                                err, sizeof(err)), err);
            rc != kExitOk)
          return rc;

        std::printf("M=%d N=%d%s: offline error %.4f, peaks found %.2f\n", m, n,
                    tag.c_str(), dcpso_result_offline_error_mean(result.get()),
                    dcpso_result_peaks_found_mean(result.get()));
        results.push_back(std::move(result));
      }
    }

    std::vector<const dcpso_result*> raw;
    raw.reserve(results.size());
    for (const ResultPtr& r : results) raw.push_back(r.get());

    const std::string summary = (fs::path(args.out_dir) / ("summary" + tag + ".csv")).string();
    const std::string plot =
        (fs::path(args.out_dir) / ("plot_offline_error_vs_m" + tag + ".csv")).string();
    if (const int rc = write_csv(dcpso_write_summary_csv(raw.data(), raw.size(),
                                                         summary.c_str(), err, sizeof(err)), err);
        rc != kExitOk)
      return rc;
    if (const int rc = write_csv(dcpso_write_plot_csv(raw.data(), raw.size(),
                                                      plot.c_str(), err, sizeof(err)), err);
        rc != kExitOk)
      return rc;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dcpso: diverse clustering PSO on the moving peaks benchmark"};
  app.set_version_flag("--version", std::string(dcpso_version()));
  app.require_subcommand(1);

  CommonArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "execute one experiment and write metrics CSVs");
  add_common_options(run_cmd, &run_args);

  CommonArgs grid_args;
  CLI::App* grid_cmd = app.add_subcommand(
      "grid", "sweep the swarm-size x cluster-capacity grid and write metrics CSVs");
  add_common_options(grid_cmd, &grid_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (run_cmd->parsed()) return command_run(run_args);
  return command_grid(grid_args);
}
