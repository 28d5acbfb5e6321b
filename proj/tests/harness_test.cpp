#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "config.hpp"
#include "errors.hpp"
#include "harness.hpp"

using namespace dcpso;

namespace {

ChangeRecord record(double best_found, double optimum) {
  ChangeRecord r;
  r.best_found = best_found;
  r.optimum = optimum;
  return r;
}

// Small but complete experiment; a run takes a few thousand evaluations.
ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.swarm_size = 20;
  cfg.max_subsize = 3;
  cfg.change_frequency = 2000;
  cfg.environments = 4;
  cfg.runs = 2;
  cfg.base_seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("offline_error: arithmetic over records") {
  CHECK(offline_error(std::vector<ChangeRecord>{record(50, 50), record(60, 60)}) == 0.0);
  CHECK(offline_error(std::vector<ChangeRecord>{record(48, 50), record(49.5, 50)}) ==
        doctest::Approx(1.25).epsilon(1e-15));
  CHECK(offline_error(std::vector<ChangeRecord>{record(49, 50)}) == 1.0);
  CHECK_THROWS_AS(offline_error({}), std::invalid_argument);
}

TEST_CASE("aggregate: means and population stddev") {
  RunResult a;
  a.offline_error = 1.0;
  a.records = {record(49, 50)};
  a.records[0].peaks_found = 4;

  SUBCASE("a single run has zero spread") {
    const ExperimentSummary s = aggregate(std::vector<RunResult>{a});
    CHECK(s.runs == 1);
    CHECK(s.offline_error_mean == 1.0);
    CHECK(s.offline_error_stddev == 0.0);
    CHECK(s.peaks_found_mean == 4.0);
  }
  SUBCASE("two runs average") {
    RunResult b = a;
    b.offline_error = 3.0;
    const ExperimentSummary s = aggregate(std::vector<RunResult>{a, b});
    CHECK(s.offline_error_mean == 2.0);
    CHECK(s.offline_error_stddev == 1.0);
  }
  SUBCASE("no runs is a contract violation") {
    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
  }
}

TEST_CASE("parse_config: empty document yields the documented defaults") {
  const ExperimentConfig cfg = parse_config_text("");
  CHECK(cfg.swarm_size == 70);
  CHECK(cfg.max_subsize == 3);
  CHECK(cfg.change_frequency == 10000);
  CHECK(cfg.environments == 100);
  CHECK(cfg.mpb.dims == 5);
  CHECK(cfg.mpb.num_peaks == 10);
  CHECK(cfg.mpb.shift_length == 1.0);
  CHECK(cfg.mpb.height_severity == 7.0);
  CHECK(cfg.mpb.shape == PeakShape::kSharp);
  CHECK(cfg.diversity_enabled);
  CHECK_FALSE(cfg.confidence_enabled);
  CHECK(resolved_v_max(cfg) == 50.0);
}

TEST_CASE("parse_config: overrides, comments and whitespace") {
  const ExperimentConfig cfg = parse_config_text(
      "# a comment line\n"
      "swarm_size = 10\n"
      "max_subsize=2   # trailing comment\n"
      "\n"
      "mpb.peak_shape = cone\n"
      "pso.v_max = 12.5\n");
  CHECK(cfg.swarm_size == 10);
  CHECK(cfg.max_subsize == 2);
  CHECK(cfg.mpb.shape == PeakShape::kCone);
  CHECK(resolved_v_max(cfg) == 12.5);
}

TEST_CASE("parse_config: errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_config_text("swarm_size = 1\n"),
                       "swarm_size: must be >= 2", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("no_such_key = 5\n"),
                       "unknown configuration key 'no_such_key'", ConfigError);
  CHECK_THROWS_AS(parse_config_text("swarm_size = seventy\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("just some words\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("runs = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("change_frequency = 30\n"), ConfigError);  // < swarm_size
  CHECK_THROWS_AS(parse_config_file("/no/such/config/file.cfg"), ConfigError);
}

TEST_CASE("config keys: every documented key serializes and round-trips") {
  ExperimentConfig cfg;
  for (const ConfigKeyInfo& info : config_key_table()) {
    const std::string value = get_config_value(cfg, info.key);
    CHECK(value == info.default_value);
    apply_config_override(cfg, info.key, value);  // setting the default back is a no-op
  }
  CHECK_THROWS_AS(get_config_value(cfg, "bogus"), ConfigError);
}

TEST_CASE("run_single: deterministic in config and seed") {
  const ExperimentConfig cfg = small_config();
  const RunResult a = run_single(cfg, 42);
  const RunResult b = run_single(cfg, 42);
  REQUIRE(a.records.size() == b.records.size());
  CHECK(a.offline_error == b.offline_error);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].best_found == b.records[i].best_found);
    CHECK(a.records[i].optimum == b.records[i].optimum);
    CHECK(a.records[i].peaks_found == b.records[i].peaks_found);
    CHECK(a.records[i].clusters_generated == b.records[i].clusters_generated);
    CHECK(a.records[i].survived_clusters == b.records[i].survived_clusters);
  }
  const RunResult c = run_single(cfg, 43);
  CHECK(a.offline_error != c.offline_error);
}

TEST_CASE("run_single: record identities hold on every environment") {
  const ExperimentConfig cfg = small_config();
  const RunResult result = run_single(cfg, 5);
  REQUIRE(static_cast<int>(result.records.size()) == cfg.environments);
  int expected_env = 1;
  for (const ChangeRecord& rec : result.records) {
    CHECK(rec.environment == expected_env++);
    CHECK(rec.best_found <= rec.optimum + 1e-9);
    CHECK(rec.evaluations_used == cfg.change_frequency);
    CHECK(rec.peaks_found >= 0);
    CHECK(rec.peaks_found <= cfg.mpb.num_peaks);
    CHECK(rec.survived_clusters >= 1);
  }
  CHECK(result.offline_error >= 0.0);
  CHECK(result.offline_error ==
        doctest::Approx(offline_error(result.records)).epsilon(1e-15));
}

TEST_CASE("run_single: a trivial static one-peak problem is solved to tolerance") {
  ExperimentConfig cfg;
  cfg.mpb.dims = 1;
  cfg.mpb.num_peaks = 1;
  cfg.mpb.shift_length = 0.0;
  cfg.mpb.height_severity = 0.0;
  cfg.mpb.width_severity = 0.0;
  cfg.swarm_size = 10;
  cfg.max_subsize = 2;
  cfg.change_frequency = 1000;
  cfg.environments = 1;
  cfg.runs = 1;
  const RunResult result = run_single(cfg, 3);
  REQUIRE(result.records.size() == 1);
  CHECK(result.offline_error >= 0.0);
  CHECK(result.offline_error < 1e-2);
  CHECK(result.records[0].peaks_found == 1);
}

TEST_CASE("run_single: budget too small for even one iteration still terminates") {
  ExperimentConfig cfg;
  cfg.mpb.dims = 2;
  cfg.swarm_size = 20;
  cfg.max_subsize = 2;
  cfg.change_frequency = 20;  // the cradle swarm itself crosses the boundary
  cfg.environments = 3;
  cfg.runs = 1;
  const RunResult result = run_single(cfg, 1);
  REQUIRE(result.records.size() == 3);
  for (const ChangeRecord& rec : result.records) {
    CHECK(rec.evaluations_used == 20);
    CHECK(rec.best_found <= rec.optimum + 1e-9);
  }
}

TEST_CASE("run_experiment: seeds follow base_seed and results are ordered") {
  ExperimentConfig cfg = small_config();
  cfg.runs = 3;
  cfg.base_seed = 100;
  const std::vector<RunResult> results = run_experiment(cfg);
  REQUIRE(results.size() == 3);
  CHECK(results[0].seed == 100);
  CHECK(results[1].seed == 101);
  CHECK(results[2].seed == 102);
  // parallel execution must not change per-seed outcomes
  CHECK(results[1].offline_error == run_single(cfg, 101).offline_error);
}

TEST_CASE("csv emission: shapes and determinism") {
  ExperimentConfig cfg = small_config();
  cfg.environments = 2;
  cfg.runs = 1;
  ExperimentResult result = run_and_aggregate(cfg);

  SUBCASE("per-change has a header plus one row per record") {
    std::ostringstream out;
    write_per_change_csv(out, result);
    std::istringstream in(out.str());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3);
    std::istringstream in2(out.str());
    std::getline(in2, line);
    CHECK(line ==
          "run_seed,environment_index,best_found,optimum,error,peaks_found,"
          "clusters_generated,survived_clusters");
  }
  SUBCASE("summary is keyed by the config cell") {
    ExperimentResult other = result;
    other.config.swarm_size = 30;
    const ExperimentResult* cells[] = {&result, &other};
    std::ostringstream out;
    write_summary_csv(out, cells);
    std::istringstream in(out.str());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3);  // header + one row per cell
  }
  SUBCASE("empty result sets yield header-only files") {
    std::ostringstream summary, plot;
    write_summary_csv(summary, {});
    write_plot_csv(plot, {});
    CHECK(summary.str() ==
          "swarm_size,max_subsize,runs,environments,offline_error_mean,"
          "offline_error_stddev,peaks_found_mean,clusters_generated_mean,"
          "survived_clusters_mean\n");
    CHECK(plot.str() == "series,x,y\n");
  }
  SUBCASE("identical experiments serialize byte-identically") {
    const ExperimentResult again = run_and_aggregate(cfg);
    std::ostringstream a, b;
    write_per_change_csv(a, result);
    write_per_change_csv(b, again);
    CHECK(a.str() == b.str());
  }
  SUBCASE("plot rows order series by subsize then swarm size") {
    ExperimentResult c1 = result;
    c1.config.swarm_size = 30;
    c1.config.max_subsize = 2;
    ExperimentResult c2 = result;
    c2.config.swarm_size = 10;
    c2.config.max_subsize = 2;
    const ExperimentResult* cells[] = {&c1, &c2};
    std::ostringstream out;
    write_plot_csv(out, cells);
    std::istringstream in(out.str());
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(first.rfind("N=2,10,", 0) == 0);
  }
  SUBCASE("unwritable paths raise IoError naming the path") {
    CHECK_THROWS_AS(write_per_change_csv("/no/such/dir/out.csv", result), IoError);
  }
}

TEST_CASE("run_experiment: invalid configuration fails before any evaluation") {
  ExperimentConfig cfg = small_config();
  cfg.max_subsize = 1;
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}
