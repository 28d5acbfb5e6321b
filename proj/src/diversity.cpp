#include "diversity.hpp"

#include <cmath>

namespace dcpso {

bool ConfidenceTable::observe(std::span<const double> position) {
  std::vector<long long> key;
  key.reserve(position.size());
  for (double x : position) key.push_back(std::llround(x * 10.0));
  return ++counts_[key] >= 2;
}

std::optional<std::size_t> select_worst_cluster(const std::vector<Cluster>& clusters) {
  if (clusters.size() < 2) return std::nullopt;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < clusters.size(); ++i) {
    if (clusters[i].lbest_fitness < clusters[worst].lbest_fitness) worst = i;
  }
  return worst;
}

ScoredPosition recombine_best_dimensions(std::span<const double> worst_position,
                                         double worst_fitness,
                                         std::span<const std::vector<double>> donors,
                                         const Evaluator& evaluate) {
  ScoredPosition current;
  current.position.assign(worst_position.begin(), worst_position.end());
  current.fitness = worst_fitness;
  std::vector<double> trial = current.position;
  for (std::size_t d = 0; d < trial.size(); ++d) {
    for (const std::vector<double>& donor : donors) {
      const double kept = trial[d];
      trial[d] = donor[d];
      const double f = evaluate(trial);
      if (f > current.fitness) {
        current.position = trial;
        current.fitness = f;
      } else {
        trial[d] = kept;
      }
    }
  }
  return current;
}

void relocate_cluster(Cluster& c, const ScoredPosition& target, Rng& rng,
                      double spread, const Bounds& bounds, const Evaluator& evaluate) {
  c.lbest_position = target.position;
  c.lbest_fitness = target.fitness;
  for (Particle& p : c.members) {
    for (std::size_t d = 0; d < p.position.size(); ++d) {
      p.position[d] = bounds.clamp(target.position[d] + rng.uniform(-spread, spread));
    }
    std::fill(p.velocity.begin(), p.velocity.end(), 0.0);
    p.pbest_position = p.position;
    p.pbest_fitness = evaluate(p.position);
    if (p.pbest_fitness > c.lbest_fitness) {
      c.lbest_position = p.pbest_position;
      c.lbest_fitness = p.pbest_fitness;
    }
  }
}

}  // namespace dcpso
