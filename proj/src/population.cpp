#include "population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dcpso {

namespace {

int members_within(const Cluster& from, const ClusterGeometry& target) {
  int n = 0;
  for (const Particle& p : from.members) {
    if (distance(p.position, target.center) <= target.radius) ++n;
  }
  return n;
}

}  // namespace

double overlap_ratio(const Cluster& a, const Cluster& b) {
  const ClusterGeometry ga = cluster_geometry(a);
  const ClusterGeometry gb = cluster_geometry(b);
  const double ratio_a = static_cast<double>(members_within(a, gb)) /
                         static_cast<double>(a.size());
  const double ratio_b = static_cast<double>(members_within(b, ga)) /
                         static_cast<double>(b.size());
  return std::min(ratio_a, ratio_b);
}

void apply_overlap_check(std::vector<Cluster>& clusters, double threshold,
                         bool merge_on_greater) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; !merged && i + 1 < clusters.size(); ++i) {
      for (std::size_t j = i + 1; !merged && j < clusters.size(); ++j) {
        const double ratio = overlap_ratio(clusters[i], clusters[j]);
        const bool fire = merge_on_greater ? ratio > threshold : ratio < threshold;
        if (!fire) continue;
        Cluster& dst = clusters[i];
        Cluster& src = clusters[j];
        if (src.lbest_fitness > dst.lbest_fitness) {
          dst.lbest_position = src.lbest_position;
          dst.lbest_fitness = src.lbest_fitness;
        }
        dst.members.insert(dst.members.end(),
                           std::make_move_iterator(src.members.begin()),
                           std::make_move_iterator(src.members.end()));
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }
}

void apply_overcrowd_check(Cluster& c, int max_subsize) {
  if (c.size() <= static_cast<std::size_t>(max_subsize)) return;
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  // Keep the top max_subsize by pbest fitness; on ties the lower index stays.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (c.members[a].pbest_fitness != c.members[b].pbest_fitness)
      return c.members[a].pbest_fitness > c.members[b].pbest_fitness;
    return a < b;
  });
  order.resize(static_cast<std::size_t>(max_subsize));
  std::sort(order.begin(), order.end());
  std::vector<Particle> kept;
  kept.reserve(order.size());
  for (std::size_t idx : order) kept.push_back(std::move(c.members[idx]));
  c.members = std::move(kept);
}

void apply_convergence_check(std::vector<Cluster>& clusters, double eps_conv,
                             Archive& archive, int environment) {
  for (auto it = clusters.begin(); it != clusters.end();) {
    if (cluster_geometry(*it).radius < eps_conv) {
      archive.entries.push_back({it->lbest_position, it->lbest_fitness, environment});
      it = clusters.erase(it);
    } else {
      ++it;
    }
  }
}

Particle random_particle(int dims, const Bounds& bounds, Rng& rng,
                         const Evaluator& evaluate) {
  Particle p;
  p.position.resize(static_cast<std::size_t>(dims));
  for (double& x : p.position) x = rng.uniform(bounds.low, bounds.high);
  p.velocity.assign(static_cast<std::size_t>(dims), 0.0);
  p.pbest_position = p.position;
  p.pbest_fitness = evaluate(p.position);
  return p;
}

int repopulate_if_empty(std::vector<Cluster>& clusters, int swarm_size,
                        int max_subsize, int dims, const Bounds& bounds,
                        Rng& rng, const Evaluator& evaluate) {
  if (!clusters.empty()) return 0;
  std::vector<Particle> swarm;
  swarm.reserve(static_cast<std::size_t>(swarm_size));
  for (int i = 0; i < swarm_size; ++i) {
    swarm.push_back(random_particle(dims, bounds, rng, evaluate));
  }
  clusters = cluster_population(std::move(swarm), max_subsize);
  return static_cast<int>(clusters.size());
}

bool detect_change(const std::vector<Cluster>& clusters, const Evaluator& evaluate) {
  bool changed = false;
  for (const Cluster& c : clusters) {
    const double f = evaluate(c.lbest_position);
    if (std::abs(f - c.lbest_fitness) > 1e-9) changed = true;
  }
  return changed;
}

int rebuild_after_change(std::vector<Cluster>& clusters, Archive& archive,
                         int swarm_size, int max_subsize, int dims,
                         const Bounds& bounds, Rng& rng, const Evaluator& evaluate) {
  std::vector<std::vector<double>> preserved;
  preserved.reserve(clusters.size() + archive.size());
  for (const Cluster& c : clusters) preserved.push_back(c.lbest_position);
  for (const ArchiveEntry& e : archive.entries) preserved.push_back(e.position);
  archive.clear();
  clusters.clear();

  std::vector<Particle> swarm;
  swarm.reserve(static_cast<std::size_t>(swarm_size) + preserved.size());
  for (int i = 0; i < swarm_size; ++i) {
    swarm.push_back(random_particle(dims, bounds, rng, evaluate));
  }
  for (std::vector<double>& pos : preserved) {
    Particle p;
    p.velocity.assign(pos.size(), 0.0);
    p.position = std::move(pos);
    p.pbest_position = p.position;
    p.pbest_fitness = evaluate(p.position);
    swarm.push_back(std::move(p));
  }
  clusters = cluster_population(std::move(swarm), max_subsize);
  return static_cast<int>(clusters.size());
}

}  // namespace dcpso
