#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rng.hpp"
#include "swarm.hpp"

namespace dcpso {

// Sighting counts of candidate positions, quantized to one decimal per
// coordinate. Cleared at every environment change.
class ConfidenceTable {
 public:
  // Registers a sighting (new positions start at 1) and returns true iff
  // the count after the increment is >= 2.
  bool observe(std::span<const double> position);
  void clear() { counts_.clear(); }
  std::size_t size() const { return counts_.size(); }

 private:
  std::map<std::vector<long long>, int> counts_;
};

struct ScoredPosition {
  std::vector<double> position;
  double fitness = 0.0;
};

// Index of the cluster with the worst lbest fitness (ties: lowest index).
// nullopt when fewer than two clusters exist and the mechanism is skipped.
std::optional<std::size_t> select_worst_cluster(const std::vector<Cluster>& clusters);

// Builds a probe into unexplored space by mixing dimensions from the other
// clusters' lbests into the worst cluster's lbest. For each dimension (in
// index order) and each donor (in index order) the single-dimension swap is
// evaluated and committed when strictly better. Costs exactly
// dims * donors.size() evaluations; the result never has lower fitness than
// the input.
ScoredPosition recombine_best_dimensions(std::span<const double> worst_position,
                                         double worst_fitness,
                                         std::span<const std::vector<double>> donors,
                                         const Evaluator& evaluate);

// Moves every member of the cluster to the target position plus uniform
// per-dimension noise in +/- spread (clamped to bounds), zeroes velocities,
// and resets pbests to the evaluated spawn points (one evaluation each).
// lbest becomes the target, or the best perturbed member if one happens to
// land higher.
void relocate_cluster(Cluster& c, const ScoredPosition& target, Rng& rng,
                      double spread, const Bounds& bounds, const Evaluator& evaluate);

}  // namespace dcpso
