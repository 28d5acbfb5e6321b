#pragma once

#include <vector>

#include "clustering.hpp"
#include "rng.hpp"
#include "swarm.hpp"

namespace dcpso {

// Best positions of clusters that converged (or survived a change), kept so
// the next environment can keep tracking those peaks.
struct ArchiveEntry {
  std::vector<double> position;
  double fitness = 0.0;
  int environment = 0;
};

struct Archive {
  std::vector<ArchiveEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  void clear() { entries.clear(); }
};

// min over both directions of the fraction of one cluster's particles lying
// within the other's radius.
double overlap_ratio(const Cluster& a, const Cluster& b);

// Merges cluster pairs whose overlap ratio exceeds the threshold (or falls
// below it when merge_on_greater is false), keeping the better lbest.
// Rescans from the start after each merge until no merge fires.
void apply_overlap_check(std::vector<Cluster>& clusters, double threshold,
                         bool merge_on_greater = true);

// Trims the cluster to max_subsize members, dropping the worst pbest
// fitnesses first (ties: the higher member index goes). lbest is untouched.
void apply_overcrowd_check(Cluster& c, int max_subsize);

// Removes every cluster whose radius fell below eps_conv and archives its
// lbest under the given environment index.
void apply_convergence_check(std::vector<Cluster>& clusters, double eps_conv,
                             Archive& archive, int environment);

// A fresh uniformly random particle; pbest is the evaluated spawn point.
Particle random_particle(int dims, const Bounds& bounds, Rng& rng,
                         const Evaluator& evaluate);

// When the cluster list is empty, spawns swarm_size random particles and
// clusters them. Returns the number of clusters created (0 when the list
// was non-empty).
int repopulate_if_empty(std::vector<Cluster>& clusters, int swarm_size,
                        int max_subsize, int dims, const Bounds& bounds,
                        Rng& rng, const Evaluator& evaluate);

// Re-evaluates every cluster's lbest position (budgeted). True iff any
// fitness moved by more than 1e-9 from its stored value.
bool detect_change(const std::vector<Cluster>& clusters, const Evaluator& evaluate);

// After an environment change: keeps the lbest positions of surviving
// clusters plus the archived entries of the previous environment, spawns a
// fresh cradle swarm of swarm_size random particles, re-evaluates the
// preserved positions as zero-velocity particles on top of it, and clusters
// the union. Re-injected archive entries are dropped. Returns the number of
// clusters created.
int rebuild_after_change(std::vector<Cluster>& clusters, Archive& archive,
                         int swarm_size, int max_subsize, int dims,
                         const Bounds& bounds, Rng& rng, const Evaluator& evaluate);

}  // namespace dcpso
