#include "clustering.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dcpso {

double single_linkage_distance(const Cluster& a, const Cluster& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Particle& pa : a.members) {
    for (const Particle& pb : b.members) {
      best = std::min(best, squared_distance(pa.position, pb.position));
    }
  }
  return std::sqrt(best);
}

std::optional<std::pair<std::size_t, std::size_t>> find_nearest_pair(
    const std::vector<Cluster>& clusters, int max_subsize) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      if (clusters[i].size() + clusters[j].size() > static_cast<std::size_t>(max_subsize))
        continue;
      const double d = single_linkage_distance(clusters[i], clusters[j]);
      if (d < best_distance) {
        best_distance = d;
        best = {i, j};
      }
    }
  }
  return best;
}

namespace {

void init_lbest_from_members(Cluster& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.members.size(); ++i) {
    if (c.members[i].pbest_fitness > c.members[best].pbest_fitness) best = i;
  }
  c.lbest_position = c.members[best].pbest_position;
  c.lbest_fitness = c.members[best].pbest_fitness;
}

bool has_singleton(const std::vector<Cluster>& clusters) {
  return std::any_of(clusters.begin(), clusters.end(),
                     [](const Cluster& c) { return c.size() < 2; });
}

}  // namespace

std::vector<Cluster> cluster_population(std::vector<Particle> particles, int max_subsize) {
  if (particles.empty())
    throw std::invalid_argument("cluster_population: empty particle list");
  if (max_subsize < 2)
    throw std::invalid_argument("cluster_population: max_subsize must be >= 2");

  std::vector<Cluster> clusters;
  clusters.reserve(particles.size());
  for (Particle& p : particles) {
    Cluster c;
    c.members.push_back(std::move(p));
    clusters.push_back(std::move(c));
  }

  while (has_singleton(clusters)) {
    const auto pair = find_nearest_pair(clusters, max_subsize);
    if (!pair) break;
    const auto [i, j] = *pair;
    auto& dst = clusters[i].members;
    auto& src = clusters[j].members;
    dst.insert(dst.end(), std::make_move_iterator(src.begin()),
               std::make_move_iterator(src.end()));
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
  }

  for (Cluster& c : clusters) init_lbest_from_members(c);
  return clusters;
}

}  // namespace dcpso
