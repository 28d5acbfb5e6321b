#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace dcpso {

enum class PeakShape {
  kSharp,  // F = max_i H_i / (1 + W_i * sum_j (x_j - X_ij)^2)
  kCone,   // F = max_i (H_i - W_i * sqrt(sum_j (x_j - X_ij)^2))
};

// Benchmark settings. Defaults reproduce the standard 5-D, 10-peak scenario.
struct MpbConfig {
  int dims = 5;
  int num_peaks = 10;
  Bounds bounds{0.0, 100.0};
  double height_min = 30.0;
  double height_max = 70.0;
  double initial_height = 50.0;
  double width_min = 1.0;
  double width_max = 12.0;
  double shift_length = 1.0;      // s: norm of each per-change location shift
  double lambda = 0.0;            // correlation between consecutive shifts
  double height_severity = 7.0;
  double width_severity = 1.0;
  PeakShape shape = PeakShape::kSharp;
};

struct Peak {
  double height = 0.0;
  double width = 0.0;
  std::vector<double> location;
  std::vector<double> velocity;
};

// Probe = (center, radius). Counts peak locations lying within distance
// <= radius of at least one probe; each peak counted at most once.
int count_peaks_found(std::span<const std::vector<double>> peak_locations,
                      std::span<const std::pair<std::vector<double>, double>> probes);

// A set of moving peaks plus the dynamics that shift them. Owns its own
// random stream and evaluation counter; one instance per run, never shared.
class Landscape {
 public:
  Landscape(const MpbConfig& config, std::uint64_t seed);

  // Landscape with explicitly placed peaks (reproducible scenarios).
  // peaks.size() must match config.num_peaks and every location must have
  // config.dims coordinates.
  Landscape(const MpbConfig& config, std::vector<Peak> peaks, std::uint64_t seed);

  // Fitness at x (any finite point; clamping is the caller's job).
  // Counts one evaluation. Throws std::invalid_argument on a dimension
  // mismatch.
  double evaluate(std::span<const double> x);

  // Applies one environment change: every peak shifts by a vector of norm
  // shift_length (blended with its previous velocity by lambda), and height
  // and width take an additive severity-scaled normal perturbation. All
  // values are clamped back into their configured ranges.
  void advance();

  // Location and fitness of the best peak (lowest index wins ties).
  // Oracle access: does not count as an evaluation.
  std::pair<std::vector<double>, double> current_optimum() const;

  // Number of distinct peaks lying within distance <= radius of at least
  // one probe. Probes are (center, radius) pairs.
  int peaks_found(std::span<const std::pair<std::vector<double>, double>> probes) const;

  const std::vector<Peak>& peaks() const { return peaks_; }
  const MpbConfig& config() const { return config_; }
  int dims() const { return config_.dims; }
  std::int64_t evaluations() const { return evaluations_; }
  int change_count() const { return change_count_; }

  // Norm of each peak's last pre-clamp location shift; empty before the
  // first advance.
  const std::vector<double>& last_shift_norms() const { return last_shift_norms_; }

 private:
  double raw_evaluate(std::span<const double> x) const;

  MpbConfig config_;
  std::vector<Peak> peaks_;
  Rng rng_;
  std::int64_t evaluations_ = 0;
  int change_count_ = 0;
  std::vector<double> last_shift_norms_;
};

}  // namespace dcpso
