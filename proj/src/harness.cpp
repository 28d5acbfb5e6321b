#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "clustering.hpp"
#include "csv.hpp"
#include "diversity.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace dcpso {

namespace {

// Snapshot taken at the instant the evaluation counter crossed an
// environment boundary, before the landscape advanced.
struct Boundary {
  int environment = 0;
  double best_found = 0.0;
  double optimum = 0.0;
  std::vector<std::vector<double>> peak_locations;
  bool landscape_changed = false;
  std::int64_t crossing_evaluations = 0;
};

// Owns the landscape and drives its dynamics off the evaluation counter:
// the advance happens exactly at the crossing, mid-operation if need be.
// The algorithm only learns about it through detect_change.
class BudgetClock {
 public:
  BudgetClock(const MpbConfig& mpb, std::uint64_t seed, std::int64_t u_cf,
              int environments)
      : landscape_(mpb, seed), u_cf_(u_cf), environments_(environments) {}

  double evaluate(std::span<const double> x) {
    const double f = landscape_.evaluate(x);
    best_in_window_ = std::max(best_in_window_, f);
    if (completed_ < environments_ &&
        landscape_.evaluations() >= (completed_ + 1) * u_cf_) {
      cross();
    }
    return f;
  }

  std::int64_t evaluations() const { return landscape_.evaluations(); }
  int completed() const { return completed_; }
  bool has_pending() const { return !pending_.empty(); }
  const std::deque<Boundary>& pending() const { return pending_; }
  std::deque<Boundary> take_pending() { return std::exchange(pending_, {}); }
  const Landscape& landscape() const { return landscape_; }

 private:
  std::vector<double> dynamics_state() const {
    std::vector<double> state;
    for (const Peak& peak : landscape_.peaks()) {
      state.push_back(peak.height);
      state.push_back(peak.width);
      state.insert(state.end(), peak.location.begin(), peak.location.end());
    }
    return state;
  }

  void cross() {
    Boundary b;
    b.environment = completed_ + 1;
    b.best_found = best_in_window_;
    b.optimum = landscape_.current_optimum().second;
    b.peak_locations.reserve(landscape_.peaks().size());
    for (const Peak& peak : landscape_.peaks()) b.peak_locations.push_back(peak.location);
    b.crossing_evaluations = landscape_.evaluations();

    const std::vector<double> before = dynamics_state();
    landscape_.advance();
    b.landscape_changed = dynamics_state() != before;

    pending_.push_back(std::move(b));
    ++completed_;
    best_in_window_ = -std::numeric_limits<double>::infinity();
  }

  Landscape landscape_;
  std::int64_t u_cf_;
  int environments_;
  int completed_ = 0;
  double best_in_window_ = -std::numeric_limits<double>::infinity();
  std::deque<Boundary> pending_;
};

int population_size(const std::vector<Cluster>& clusters) {
  int n = 0;
  for (const Cluster& c : clusters) n += static_cast<int>(c.size());
  return n;
}

}  // namespace

double offline_error(std::span<const ChangeRecord> records) {
  if (records.empty())
    throw std::invalid_argument("offline_error: no change records");
  double sum = 0.0;
  for (const ChangeRecord& rec : records) sum += rec.optimum - rec.best_found;
  return sum / static_cast<double>(records.size());
}

RunResult run_single(const ExperimentConfig& config, std::uint64_t seed) {
  validate_config(config);

  PsoParams pso = config.pso;
  pso.v_max = resolved_v_max(config);
  const Bounds bounds = config.mpb.bounds;
  const int dims = config.mpb.dims;

  Rng alg_rng(derive_stream_seed(seed, 1));
  BudgetClock clock(config.mpb, derive_stream_seed(seed, 0),
                    config.change_frequency, config.environments);
  const Evaluator evaluate = [&clock](std::span<const double> x) {
    return clock.evaluate(x);
  };

  RunResult result;
  result.seed = seed;
  result.records.reserve(static_cast<std::size_t>(config.environments));

  // Cradle swarm.
  std::vector<Particle> swarm;
  swarm.reserve(static_cast<std::size_t>(config.swarm_size));
  for (int i = 0; i < config.swarm_size; ++i) {
    swarm.push_back(random_particle(dims, bounds, alg_rng, evaluate));
  }
  std::vector<Cluster> clusters = cluster_population(std::move(swarm), config.max_subsize);

  Archive archive;
  ConfidenceTable confidence;
  int clusters_generated = static_cast<int>(clusters.size());
  int c_itr = 0;
  int iterations_pending = 0;
  std::int64_t last_crossing_evaluations = 0;

  while (static_cast<int>(result.records.size()) < config.environments) {
    const int p_size = std::max(population_size(clusters), 1);
    const std::int64_t window_evals = std::clamp<std::int64_t>(
        clock.evaluations() - static_cast<std::int64_t>(clock.completed()) * config.change_frequency,
        0, config.change_frequency);
    const int r_itr = remaining_iterations(config.change_frequency, window_evals, p_size);
    const double w = inertia(pso.w_max, pso.w_min, std::min(c_itr, r_itr), r_itr);

    // PSO updates plus dimension-wise lbest learning for improved particles.
    for (Cluster& c : clusters) {
      std::vector<std::size_t> improved;
      for (std::size_t m = 0; m < c.members.size(); ++m) {
        Particle& p = c.members[m];
        step_particle(p, c.lbest_position, w, pso, bounds,
                      [&alg_rng] { return alg_rng.uniform(); });
        const double f = evaluate(p.position);
        if (update_pbest(p, f)) improved.push_back(m);
      }
      std::size_t learned = 0;
      for (const std::size_t m : improved) {
        if (config.lbest_learn_cap > 0 &&
            learned >= static_cast<std::size_t>(config.lbest_learn_cap)) {
          break;
        }
        const Particle& p = c.members[m];
        if (config.lbest_learn_on_lbest_improvement &&
            p.pbest_fitness <= c.lbest_fitness) {
          continue;
        }
        learn_lbest_dimensionwise(c, p.pbest_position, p.pbest_fitness, evaluate);
        ++learned;
      }
    }

    // Diversity: probe a recombination of the other clusters' best
    // dimensions and move the worst cluster there when it improves.
    if (config.diversity_enabled) {
      if (const auto worst = select_worst_cluster(clusters)) {
        std::vector<std::vector<double>> donors;
        donors.reserve(clusters.size() - 1);
        for (std::size_t i = 0; i < clusters.size(); ++i) {
          if (i != *worst) donors.push_back(clusters[i].lbest_position);
        }
        Cluster& worst_cluster = clusters[*worst];
        const ScoredPosition probe = recombine_best_dimensions(
            worst_cluster.lbest_position, worst_cluster.lbest_fitness, donors, evaluate);
        if (probe.fitness > worst_cluster.lbest_fitness &&
            (!config.confidence_enabled || confidence.observe(probe.position))) {
          relocate_cluster(worst_cluster, probe, alg_rng, config.relocation_spread,
                           bounds, evaluate);
        }
      }
    }

    // Redundancy control, in flow-chart order.
    apply_overlap_check(clusters, config.overlap_threshold,
                        config.overlap_merge_on_greater);
    for (Cluster& c : clusters) apply_overcrowd_check(c, config.max_subsize);
    apply_convergence_check(clusters, config.convergence_radius, archive,
                            static_cast<int>(result.records.size()) + 1);
    clusters_generated += repopulate_if_empty(clusters, config.swarm_size,
                                              config.max_subsize, dims, bounds,
                                              alg_rng, evaluate);

    // Change detection by lbest re-evaluation.
    bool detection_ran = false;
    bool detected = false;
    std::int64_t detection_start_evals = 0;
    if (!clusters.empty()) {
      detection_ran = true;
      detection_start_evals = clock.evaluations();
      detected = detect_change(clusters, evaluate);
    }
    ++c_itr;

    if (clock.has_pending()) {
      const Boundary& head = clock.pending().front();
      // Detection had a fair look when the crossing happened before its
      // re-evaluations started. A fair look that reports no change means no
      // stale lbest remains (detection re-measures every one of them), so
      // the boundary is processed either way; only an unfair look defers it
      // by one iteration.
      const bool fair_look =
          detection_ran && head.crossing_evaluations <= detection_start_evals;
      const bool force_handle = fair_look || !head.landscape_changed ||
                                !detection_ran || clock.pending().size() > 1 ||
                                clock.completed() >= config.environments;
      if (detected || force_handle) {
        for (const Boundary& b : clock.take_pending()) {
          ChangeRecord rec;
          rec.environment = b.environment;
          rec.best_found = b.best_found;
          rec.optimum = b.optimum;
          std::vector<std::pair<std::vector<double>, double>> probes;
          probes.reserve(clusters.size() + archive.size());
          for (const Cluster& c : clusters) {
            // A cluster's search position is its lbest; the center of a
            // two-member cluster with one laggard sits a full radius away
            // from the peak it is tracking.
            probes.emplace_back(c.lbest_position,
                                std::max(cluster_geometry(c).radius,
                                         config.peak_probe_radius));
          }
          for (const ArchiveEntry& e : archive.entries) {
            probes.emplace_back(e.position, config.peak_probe_radius);
          }
          rec.peaks_found = count_peaks_found(b.peak_locations, probes);
          rec.clusters_generated = clusters_generated;
          rec.survived_clusters = static_cast<int>(clusters.size() + archive.size());
          rec.evaluations_used = b.crossing_evaluations - last_crossing_evaluations;
          last_crossing_evaluations = b.crossing_evaluations;
          result.records.push_back(std::move(rec));
        }
        iterations_pending = 0;
        if (static_cast<int>(result.records.size()) >= config.environments) break;
        clusters_generated = rebuild_after_change(clusters, archive, config.swarm_size,
                                                  config.max_subsize, dims, bounds,
                                                  alg_rng, evaluate);
        confidence.clear();
        c_itr = 0;
      } else if (++iterations_pending > 1) {
        throw InternalError(
            "change-detection audit: an environment change went unprocessed "
            "for more than one iteration");
      }
    }
  }

  result.offline_error = offline_error(result.records);
  return result;
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<RunResult> results(static_cast<std::size_t>(config.runs));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      std::min<unsigned>(hw, static_cast<unsigned>(config.runs));

  if (workers <= 1) {
    for (int i = 0; i < config.runs; ++i) {
      results[static_cast<std::size_t>(i)] =
          run_single(config, config.base_seed + static_cast<std::uint64_t>(i));
    }
    return results;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (int i = next.fetch_add(1); i < config.runs; i = next.fetch_add(1)) {
          results[static_cast<std::size_t>(i)] =
              run_single(config, config.base_seed + static_cast<std::uint64_t>(i));
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

ExperimentSummary aggregate(std::span<const RunResult> results) {
  if (results.empty()) throw std::invalid_argument("aggregate: no run results");
  ExperimentSummary s;
  s.runs = static_cast<int>(results.size());
  double error_sum = 0.0;
  for (const RunResult& run : results) error_sum += run.offline_error;
  s.offline_error_mean = error_sum / static_cast<double>(results.size());

  double variance = 0.0;
  for (const RunResult& run : results) {
    const double d = run.offline_error - s.offline_error_mean;
    variance += d * d;
  }
  s.offline_error_stddev = std::sqrt(variance / static_cast<double>(results.size()));

  auto run_mean = [](const RunResult& run, auto field) {
    double sum = 0.0;
    for (const ChangeRecord& rec : run.records) sum += static_cast<double>(rec.*field);
    return run.records.empty() ? 0.0 : sum / static_cast<double>(run.records.size());
  };
  for (const RunResult& run : results) {
    s.peaks_found_mean += run_mean(run, &ChangeRecord::peaks_found);
    s.clusters_generated_mean += run_mean(run, &ChangeRecord::clusters_generated);
    s.survived_clusters_mean += run_mean(run, &ChangeRecord::survived_clusters);
  }
  s.peaks_found_mean /= static_cast<double>(results.size());
  s.clusters_generated_mean /= static_cast<double>(results.size());
  s.survived_clusters_mean /= static_cast<double>(results.size());
  return s;
}

ExperimentResult run_and_aggregate(const ExperimentConfig& config) {
  ExperimentResult result;
  result.config = config;
  result.runs = run_experiment(config);
  result.summary = aggregate(result.runs);
  return result;
}

void write_per_change_csv(std::ostream& out, const ExperimentResult& result) {
  out << "run_seed,environment_index,best_found,optimum,error,peaks_found,"
         "clusters_generated,survived_clusters\n";
  for (const RunResult& run : result.runs) {
    for (const ChangeRecord& rec : run.records) {
      out << run.seed << ',' << rec.environment << ',' << format_real(rec.best_found)
          << ',' << format_real(rec.optimum) << ','
          << format_real(rec.optimum - rec.best_found) << ',' << rec.peaks_found
          << ',' << rec.clusters_generated << ',' << rec.survived_clusters << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out,
                       std::span<const ExperimentResult* const> results) {
  out << "swarm_size,max_subsize,runs,environments,offline_error_mean,"
         "offline_error_stddev,peaks_found_mean,clusters_generated_mean,"
         "survived_clusters_mean\n";
  for (const ExperimentResult* result : results) {
    const ExperimentSummary& s = result->summary;
    out << result->config.swarm_size << ',' << result->config.max_subsize << ','
        << s.runs << ',' << result->config.environments << ','
        << format_real(s.offline_error_mean) << ','
        << format_real(s.offline_error_stddev) << ','
        << format_real(s.peaks_found_mean) << ','
        << format_real(s.clusters_generated_mean) << ','
        << format_real(s.survived_clusters_mean) << '\n';
  }
}

void write_plot_csv(std::ostream& out,
                    std::span<const ExperimentResult* const> results) {
  out << "series,x,y\n";
  std::vector<int> subsizes;
  for (const ExperimentResult* r : results) subsizes.push_back(r->config.max_subsize);
  std::sort(subsizes.begin(), subsizes.end());
  subsizes.erase(std::unique(subsizes.begin(), subsizes.end()), subsizes.end());
  for (int n : subsizes) {
    std::vector<const ExperimentResult*> series;
    for (const ExperimentResult* r : results) {
      if (r->config.max_subsize == n) series.push_back(r);
    }
    std::sort(series.begin(), series.end(),
              [](const ExperimentResult* a, const ExperimentResult* b) {
                return a->config.swarm_size < b->config.swarm_size;
              });
    for (const ExperimentResult* r : series) {
      out << "N=" << n << ',' << r->config.swarm_size << ','
          << format_real(r->summary.offline_error_mean) << '\n';
    }
  }
}

namespace {

template <class WriteFn>
void write_file(const std::string& path, WriteFn&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  write(out);
  out.flush();
  if (!out.good()) throw IoError("failed writing output file: " + path);
}

}  // namespace

void write_per_change_csv(const std::string& path, const ExperimentResult& result) {
  write_file(path, [&](std::ostream& out) { write_per_change_csv(out, result); });
}

void write_summary_csv(const std::string& path,
                       std::span<const ExperimentResult* const> results) {
  write_file(path, [&](std::ostream& out) { write_summary_csv(out, results); });
}

void write_plot_csv(const std::string& path,
                    std::span<const ExperimentResult* const> results) {
  write_file(path, [&](std::ostream& out) { write_plot_csv(out, results); });
}

}  // namespace dcpso
