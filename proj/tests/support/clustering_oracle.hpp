#pragma once

// Brute-force constrained single-linkage oracle. Works on index sets over a
// plain position table and recomputes every cross-pair distance from scratch
// each round; kept independent of the library's Cluster machinery.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

using Positions = std::vector<std::vector<double>>;
using IndexCluster = std::vector<std::size_t>;

inline double point_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline double set_distance(const Positions& points, const IndexCluster& a,
                           const IndexCluster& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : a) {
    for (std::size_t j : b) {
      const double d = point_distance(points[i], points[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

// Greedy constrained single-linkage agglomeration: start from singletons,
// merge the closest pair whose union stays within max_subsize (ties: lowest
// first index, then lowest second), stop when all clusters have at least two
// members or no legal pair remains.
inline std::vector<IndexCluster> cluster(const Positions& points, int max_subsize) {
  std::vector<IndexCluster> clusters;
  for (std::size_t i = 0; i < points.size(); ++i) clusters.push_back({i});
  while (true) {
    bool any_singleton = false;
    for (const IndexCluster& c : clusters) {
      if (c.size() < 2) any_singleton = true;
    }
    if (!any_singleton) break;

    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        if (clusters[i].size() + clusters[j].size() >
            static_cast<std::size_t>(max_subsize)) {
          continue;
        }
        const double d = set_distance(points, clusters[i], clusters[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    for (std::size_t idx : clusters[bj]) clusters[bi].push_back(idx);
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return clusters;
}

}  // namespace oracle
