#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "swarm.hpp"

namespace dcpso {

// Minimum Euclidean distance over all cross pairs of member positions.
double single_linkage_distance(const Cluster& a, const Cluster& b);

// Among all pairs whose combined size stays within max_subsize, the pair
// with minimal single-linkage distance (ties: lowest first index, then
// lowest second index). nullopt when no pair satisfies the size constraint.
std::optional<std::pair<std::size_t, std::size_t>> find_nearest_pair(
    const std::vector<Cluster>& clusters, int max_subsize);

// Constrained single-linkage agglomeration of the cradle swarm: start from
// singletons, repeatedly merge the nearest legal pair, stop once every
// cluster has at least two members or no legal merge remains (residual
// singletons are allowed). Each cluster's lbest is initialized to its best
// member pbest. Throws std::invalid_argument on empty input.
std::vector<Cluster> cluster_population(std::vector<Particle> particles, int max_subsize);

}  // namespace dcpso
