#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "population.hpp"

namespace dcpso {

// One environment's closing snapshot.
struct ChangeRecord {
  int environment = 0;          // 1-based
  double best_found = 0.0;      // best raw evaluation seen in the environment
  double optimum = 0.0;         // oracle optimum of the environment
  int peaks_found = 0;
  int clusters_generated = 0;   // clusters created (clustering calls) this environment
  int survived_clusters = 0;    // live clusters + archived converged ones at change time
  std::int64_t evaluations_used = 0;
};

struct RunResult {
  std::vector<ChangeRecord> records;
  double offline_error = 0.0;
  std::uint64_t seed = 0;
};

struct ExperimentSummary {
  int runs = 0;
  double offline_error_mean = 0.0;
  double offline_error_stddev = 0.0;  // population standard deviation
  double peaks_found_mean = 0.0;
  double clusters_generated_mean = 0.0;
  double survived_clusters_mean = 0.0;
};

// One configuration's complete outcome: per-run records plus the aggregate.
struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RunResult> runs;
  ExperimentSummary summary;
};

// Mean over records of (optimum - best_found). Throws on empty input.
double offline_error(std::span<const ChangeRecord> records);

// One full run: cradle swarm, clustering, the per-iteration loop (PSO steps,
// lbest learning, diversity, overlap/overcrowd/convergence checks,
// repopulation, change detection), and one ChangeRecord per environment.
// The landscape advances exactly when the evaluation counter crosses
// environment_index * change_frequency; detection is audited against those
// crossings. Deterministic in (config, seed).
RunResult run_single(const ExperimentConfig& config, std::uint64_t seed);

// config.runs independent runs seeded base_seed + run_index, executed in
// parallel, returned in run-index order.
std::vector<RunResult> run_experiment(const ExperimentConfig& config);

// Mean and population stddev of offline error across runs, plus per-run-mean
// averages of the other metrics.
ExperimentSummary aggregate(std::span<const RunResult> results);

ExperimentResult run_and_aggregate(const ExperimentConfig& config);

// CSV emission. Columns are documented in the README; reals are serialized
// with round-trip precision. File variants throw IoError with the path.
void write_per_change_csv(std::ostream& out, const ExperimentResult& result);
void write_per_change_csv(const std::string& path, const ExperimentResult& result);
void write_summary_csv(std::ostream& out,
                       std::span<const ExperimentResult* const> results);
void write_summary_csv(const std::string& path,
                       std::span<const ExperimentResult* const> results);
// Offline error against swarm size, one series per max_subsize value.
void write_plot_csv(std::ostream& out,
                    std::span<const ExperimentResult* const> results);
void write_plot_csv(const std::string& path,
                    std::span<const ExperimentResult* const> results);

}  // namespace dcpso
