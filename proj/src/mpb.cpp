#include "mpb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"

namespace dcpso {

Landscape::Landscape(const MpbConfig& config, std::uint64_t seed)
    : config_(config), rng_(seed) {
  if (config.num_peaks < 1) throw ConfigError("mpb.peaks: must be >= 1");
  if (config.dims < 1) throw ConfigError("mpb.dims: must be >= 1");
  if (config.bounds.low > config.bounds.high)
    throw ConfigError("mpb.bound_low/mpb.bound_high: inverted bounds");
  if (config.height_severity < 0.0)
    throw ConfigError("mpb.height_severity: must be >= 0");
  if (config.width_severity < 0.0)
    throw ConfigError("mpb.width_severity: must be >= 0");
  if (config.width_min > config.width_max)
    throw ConfigError("mpb.width_min/mpb.width_max: inverted range");
  if (config.height_min > config.height_max)
    throw ConfigError("mpb.height_min/mpb.height_max: inverted range");

  peaks_.resize(static_cast<std::size_t>(config.num_peaks));
  for (Peak& peak : peaks_) {
    peak.location.resize(static_cast<std::size_t>(config.dims));
    for (double& c : peak.location) c = rng_.uniform(config.bounds.low, config.bounds.high);
    peak.velocity.assign(static_cast<std::size_t>(config.dims), 0.0);
    peak.height = config.initial_height;
    peak.width = rng_.uniform(config.width_min, config.width_max);
  }
}

Landscape::Landscape(const MpbConfig& config, std::vector<Peak> peaks,
                     std::uint64_t seed)
    : config_(config), peaks_(std::move(peaks)), rng_(seed) {
  if (static_cast<int>(peaks_.size()) != config.num_peaks)
    throw ConfigError("mpb.peaks: explicit peak list does not match num_peaks");
  for (Peak& peak : peaks_) {
    if (static_cast<int>(peak.location.size()) != config.dims)
      throw ConfigError("mpb.dims: explicit peak location dimension mismatch");
    if (peak.velocity.empty())
      peak.velocity.assign(static_cast<std::size_t>(config.dims), 0.0);
  }
}

double Landscape::raw_evaluate(std::span<const double> x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const Peak& peak : peaks_) {
    const double d2 = squared_distance(x, peak.location);
    const double f = config_.shape == PeakShape::kSharp
                         ? peak.height / (1.0 + peak.width * d2)
                         : peak.height - peak.width * std::sqrt(d2);
    best = std::max(best, f);
  }
  return best;
}

double Landscape::evaluate(std::span<const double> x) {
  if (static_cast<int>(x.size()) != config_.dims)
    throw std::invalid_argument("evaluate: position dimension mismatch");
  ++evaluations_;
  return raw_evaluate(x);
}

void Landscape::advance() {
  const int dims = config_.dims;
  last_shift_norms_.assign(peaks_.size(), 0.0);
  std::vector<double> shift(static_cast<std::size_t>(dims));
  for (std::size_t i = 0; i < peaks_.size(); ++i) {
    Peak& peak = peaks_[i];

    // Location: blend a fresh random direction with the previous velocity
    // and rescale so the shift norm equals shift_length.
    for (int d = 0; d < dims; ++d) {
      const double r = rng_.uniform(-1.0, 1.0);
      shift[static_cast<std::size_t>(d)] =
          (1.0 - config_.lambda) * r +
          config_.lambda * peak.velocity[static_cast<std::size_t>(d)];
    }
    const double len = norm(shift);
    if (len > 1e-300) {
      const double scale = config_.shift_length / len;
      for (double& c : shift) c *= scale;
    } else {
      std::fill(shift.begin(), shift.end(), 0.0);
    }
    peak.velocity = shift;
    last_shift_norms_[i] = norm(shift);
    for (int d = 0; d < dims; ++d) {
      const std::size_t j = static_cast<std::size_t>(d);
      peak.location[j] = config_.bounds.clamp(peak.location[j] + shift[j]);
    }

    // Height and width: additive severity-scaled normal perturbations,
    // clamped to their ranges.
    peak.height = std::clamp(peak.height + config_.height_severity * rng_.normal(),
                             config_.height_min, config_.height_max);
    peak.width = std::clamp(peak.width + config_.width_severity * rng_.normal(),
                            config_.width_min, config_.width_max);
  }
  ++change_count_;
}

std::pair<std::vector<double>, double> Landscape::current_optimum() const {
  std::size_t best_index = 0;
  double best_fitness = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < peaks_.size(); ++i) {
    const double f = raw_evaluate(peaks_[i].location);
    if (f > best_fitness) {
      best_fitness = f;
      best_index = i;
    }
  }
  return {peaks_[best_index].location, best_fitness};
}

int count_peaks_found(std::span<const std::vector<double>> peak_locations,
                      std::span<const std::pair<std::vector<double>, double>> probes) {
  int found = 0;
  for (const std::vector<double>& location : peak_locations) {
    for (const auto& [center, radius] : probes) {
      if (distance(location, center) <= radius) {
        ++found;
        break;
      }
    }
  }
  return found;
}

int Landscape::peaks_found(
    std::span<const std::pair<std::vector<double>, double>> probes) const {
  std::vector<std::vector<double>> locations;
  locations.reserve(peaks_.size());
  for (const Peak& peak : peaks_) locations.push_back(peak.location);
  return count_peaks_found(locations, probes);
}

}  // namespace dcpso
