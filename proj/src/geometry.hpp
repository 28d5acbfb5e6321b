#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace dcpso {

// Uniform per-dimension search-space bounds [low, high]^D.
struct Bounds {
  double low = 0.0;
  double high = 100.0;

  double width() const { return high - low; }
  double clamp(double x) const { return std::clamp(x, low, high); }
  bool contains(std::span<const double> x) const {
    for (double v : x) {
      if (v < low || v > high) return false;
    }
    return true;
  }
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

inline double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace dcpso
