#include "swarm.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcpso {

double inertia(double w_max, double w_min, int c_itr, int r_itr) {
  if (r_itr < 1) throw std::invalid_argument("inertia: r_itr must be >= 1");
  if (c_itr < 0) throw std::invalid_argument("inertia: c_itr must be >= 0");
  return w_max - (w_max - w_min) * static_cast<double>(c_itr) / static_cast<double>(r_itr);
}

int remaining_iterations(std::int64_t u_cf, std::int64_t evals, int p_size) {
  if (p_size < 1) throw std::invalid_argument("remaining_iterations: p_size must be >= 1");
  const std::int64_t left = (u_cf - evals) / p_size;
  return static_cast<int>(std::max<std::int64_t>(left, 1));
}

bool update_pbest(Particle& p, double new_fitness) {
  if (new_fitness > p.pbest_fitness) {
    p.pbest_position = p.position;
    p.pbest_fitness = new_fitness;
    return true;
  }
  return false;
}

void learn_lbest_dimensionwise(Cluster& c, std::span<const double> candidate,
                               double candidate_fitness, const Evaluator& evaluate) {
  std::vector<double> trial = c.lbest_position;
  for (std::size_t d = 0; d < trial.size(); ++d) {
    const double kept = trial[d];
    trial[d] = candidate[d];
    const double f = evaluate(trial);
    if (f > c.lbest_fitness) {
      c.lbest_position = trial;
      c.lbest_fitness = f;
    } else {
      trial[d] = kept;
    }
  }
  if (candidate_fitness > c.lbest_fitness) {
    c.lbest_position.assign(candidate.begin(), candidate.end());
    c.lbest_fitness = candidate_fitness;
  }
}

ClusterGeometry cluster_geometry(const Cluster& c) {
  ClusterGeometry g;
  const std::size_t dims = c.members.front().position.size();
  g.center.assign(dims, 0.0);
  for (const Particle& m : c.members) {
    for (std::size_t d = 0; d < dims; ++d) g.center[d] += m.position[d];
  }
  for (double& v : g.center) v /= static_cast<double>(c.members.size());
  for (const Particle& m : c.members) {
    g.radius = std::max(g.radius, distance(m.position, g.center));
  }
  return g;
}

}  // namespace dcpso
