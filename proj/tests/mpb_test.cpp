#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "mpb.hpp"
#include "rng.hpp"

using namespace dcpso;

namespace {

Peak make_peak(double height, double width, std::vector<double> location) {
  Peak p;
  p.height = height;
  p.width = width;
  p.velocity.assign(location.size(), 0.0);
  p.location = std::move(location);
  return p;
}

// Direct formula, independent of Landscape::evaluate.
double sharp_term(const Peak& p, const std::vector<double>& x) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d2 += (x[i] - p.location[i]) * (x[i] - p.location[i]);
  }
  return p.height / (1.0 + p.width * d2);
}

}  // namespace

TEST_CASE("landscape init: default settings place every peak at the initial height") {
  Landscape land(MpbConfig{}, 42);
  REQUIRE(land.peaks().size() == 10);
  for (const Peak& p : land.peaks()) {
    CHECK(p.height == 50.0);
    CHECK(p.width >= 1.0);
    CHECK(p.width <= 12.0);
    for (double c : p.location) {
      CHECK(c >= 0.0);
      CHECK(c <= 100.0);
    }
  }
  CHECK(land.change_count() == 0);
  CHECK(land.evaluations() == 0);
}

TEST_CASE("landscape init: degenerate one-point domain forces the location") {
  MpbConfig cfg;
  cfg.num_peaks = 1;
  cfg.dims = 1;
  cfg.bounds = {0.0, 0.0};
  Landscape land(cfg, 7);
  REQUIRE(land.peaks().size() == 1);
  CHECK(land.peaks()[0].location[0] == 0.0);
}

TEST_CASE("landscape init: identical config and seed give identical landscapes") {
  Landscape a(MpbConfig{}, 123);
  Landscape b(MpbConfig{}, 123);
  for (std::size_t i = 0; i < a.peaks().size(); ++i) {
    CHECK(a.peaks()[i].height == b.peaks()[i].height);
    CHECK(a.peaks()[i].width == b.peaks()[i].width);
    CHECK(a.peaks()[i].location == b.peaks()[i].location);
  }
}

TEST_CASE("landscape init: invalid configs are rejected") {
  MpbConfig bad_peaks;
  bad_peaks.num_peaks = 0;
  CHECK_THROWS_AS(Landscape(bad_peaks, 1), ConfigError);

  MpbConfig bad_bounds;
  bad_bounds.bounds = {10.0, 0.0};
  CHECK_THROWS_AS(Landscape(bad_bounds, 1), ConfigError);
}

TEST_CASE("evaluate: exact peak location returns the height") {
  MpbConfig cfg;
  cfg.num_peaks = 1;
  cfg.dims = 5;
  Landscape land(cfg, 3);
  const std::vector<double> x = land.peaks()[0].location;
  CHECK(land.evaluate(x) == land.peaks()[0].height);
  CHECK(land.evaluations() == 1);
}

TEST_CASE("evaluate: single peak at squared distance 4") {
  MpbConfig cfg;
  cfg.num_peaks = 1;
  cfg.dims = 2;
  Landscape land(cfg, {make_peak(50.0, 1.0, {10.0, 10.0})}, 0);
  const std::vector<double> x{12.0, 10.0};  // squared distance 4
  CHECK(land.evaluate(x) == doctest::Approx(50.0 / (1.0 + 4.0)).epsilon(1e-12));
}

TEST_CASE("evaluate: the taller of two peaks dominates at its own location") {
  MpbConfig cfg;
  cfg.num_peaks = 2;
  cfg.dims = 2;
  std::vector<Peak> peaks{make_peak(50.0, 2.0, {5.0, 5.0}),
                          make_peak(70.0, 2.0, {90.0, 90.0})};
  Landscape land(cfg, peaks, 0);
  const std::vector<double> x{90.0, 90.0};
  double expected = 0.0;
  for (const Peak& p : peaks) expected = std::max(expected, sharp_term(p, x));
  CHECK(expected == 70.0);
  CHECK(land.evaluate(x) == expected);
}

TEST_CASE("evaluate: cone form") {
  MpbConfig cfg;
  cfg.num_peaks = 1;
  cfg.dims = 2;
  cfg.shape = PeakShape::kCone;
  Landscape land(cfg, {make_peak(50.0, 2.0, {10.0, 10.0})}, 0);
  const std::vector<double> x{13.0, 14.0};  // distance 5
  CHECK(land.evaluate(x) == doctest::Approx(50.0 - 2.0 * 5.0).epsilon(1e-12));
}

TEST_CASE("evaluate: dimension mismatch is a contract violation") {
  Landscape land(MpbConfig{}, 1);
  std::vector<double> x{1.0, 2.0};
  CHECK_THROWS_AS(land.evaluate(x), std::invalid_argument);
}

TEST_CASE("advance: with lambda 0 every pre-clamp shift has norm s") {
  MpbConfig cfg;  // lambda = 0, s = 1
  Landscape land(cfg, 11);
  for (int i = 0; i < 100; ++i) {
    land.advance();
    for (double n : land.last_shift_norms()) {
      CHECK(n == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  CHECK(land.change_count() == 100);
}

TEST_CASE("advance: zero dynamics leave the landscape unchanged") {
  MpbConfig cfg;
  cfg.shift_length = 0.0;
  cfg.height_severity = 0.0;
  cfg.width_severity = 0.0;
  Landscape land(cfg, 5);
  const std::vector<Peak> before = land.peaks();
  land.advance();
  CHECK(land.change_count() == 1);
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(land.peaks()[i].height == before[i].height);
    CHECK(land.peaks()[i].width == before[i].width);
    CHECK(land.peaks()[i].location == before[i].location);
  }
}

TEST_CASE("advance: heights, widths and locations stay clamped in range") {
  MpbConfig cfg;
  cfg.initial_height = 70.0;  // start at the clamp so upward draws must stick
  Landscape land(cfg, 17);
  for (int i = 0; i < 1000; ++i) {
    land.advance();
    for (const Peak& p : land.peaks()) {
      CHECK(p.height >= cfg.height_min);
      CHECK(p.height <= cfg.height_max);
      CHECK(p.width >= cfg.width_min);
      CHECK(p.width <= cfg.width_max);
      for (double c : p.location) {
        CHECK(c >= cfg.bounds.low);
        CHECK(c <= cfg.bounds.high);
      }
    }
  }
}

TEST_CASE("advance: determinism across equal seeds and sequences") {
  Landscape a(MpbConfig{}, 99);
  Landscape b(MpbConfig{}, 99);
  for (int i = 0; i < 50; ++i) {
    a.advance();
    b.advance();
  }
  for (std::size_t i = 0; i < a.peaks().size(); ++i) {
    CHECK(a.peaks()[i].height == b.peaks()[i].height);
    CHECK(a.peaks()[i].location == b.peaks()[i].location);
  }
  Rng probe(1);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x(5);
    for (double& c : x) c = probe.uniform(0.0, 100.0);
    CHECK(a.evaluate(x) == b.evaluate(x));
  }
}

TEST_CASE("current_optimum: argmax peak with tie broken by the lower index") {
  MpbConfig cfg;
  cfg.num_peaks = 3;
  cfg.dims = 2;
  std::vector<Peak> peaks{make_peak(50.0, 5.0, {10.0, 10.0}),
                          make_peak(70.0, 5.0, {50.0, 50.0}),
                          make_peak(40.0, 5.0, {90.0, 90.0})};
  Landscape land(cfg, peaks, 0);
  auto [pos, fit] = land.current_optimum();
  // brute force: evaluate the full landscape at every peak location
  double best = 0.0;
  for (const Peak& p : peaks) {
    double f = 0.0;
    for (const Peak& q : peaks) f = std::max(f, sharp_term(q, p.location));
    best = std::max(best, f);
  }
  CHECK(fit == best);
  CHECK(pos == peaks[1].location);
  CHECK(land.evaluations() == 0);  // oracle access is not budgeted

  SUBCASE("equal heights pick the lower index") {
    std::vector<Peak> twins{make_peak(70.0, 5.0, {10.0, 10.0}),
                            make_peak(70.0, 5.0, {90.0, 90.0})};
    cfg.num_peaks = 2;
    Landscape tie(cfg, twins, 0);
    CHECK(tie.current_optimum().first == twins[0].location);
  }
}

TEST_CASE("current_optimum: evaluate at the returned position reproduces the fitness") {
  Landscape land(MpbConfig{}, 21);
  for (int i = 0; i < 20; ++i) {
    auto [pos, fit] = land.current_optimum();
    CHECK(land.evaluate(pos) == fit);
    land.advance();
  }
}

TEST_CASE("peaks_found: probe coverage") {
  MpbConfig cfg;
  cfg.num_peaks = 3;
  cfg.dims = 2;
  std::vector<Peak> peaks{make_peak(50.0, 5.0, {10.0, 10.0}),
                          make_peak(60.0, 5.0, {12.0, 10.0}),
                          make_peak(40.0, 5.0, {90.0, 90.0})};
  Landscape land(cfg, peaks, 0);
  using Probe = std::pair<std::vector<double>, double>;

  SUBCASE("one zero-radius probe per peak finds all of them") {
    std::vector<Probe> probes;
    for (const Peak& p : peaks) probes.push_back({p.location, 0.0});
    CHECK(land.peaks_found(probes) == 3);
  }
  SUBCASE("no probes, no peaks") {
    CHECK(land.peaks_found({}) == 0);
  }
  SUBCASE("one wide probe counts both nearby peaks once each") {
    std::vector<Probe> probes{{{11.0, 10.0}, 2.5}};
    CHECK(land.peaks_found(probes) == 2);
  }
  SUBCASE("two probes on the same peak count it once") {
    std::vector<Probe> probes{{{10.0, 10.0}, 1.0}, {{10.5, 10.0}, 1.0}};
    CHECK(land.peaks_found(probes) == 1);
  }
}

TEST_CASE("property: no evaluation exceeds the maximum peak height") {
  Landscape land(MpbConfig{}, 31);
  Rng probe(2);
  for (int round = 0; round < 20; ++round) {
    double max_height = 0.0;
    for (const Peak& p : land.peaks()) max_height = std::max(max_height, p.height);
    for (int i = 0; i < 500; ++i) {
      std::vector<double> x(5);
      for (double& c : x) c = probe.uniform(-50.0, 150.0);
      CHECK(land.evaluate(x) <= max_height);
    }
    land.advance();
  }
}

TEST_CASE("property: shift directions are isotropic on average") {
  MpbConfig cfg;
  cfg.bounds = {-1e7, 1e7};  // keep clamping out of the picture
  Landscape land(cfg, 13);
  std::vector<double> last(10, 0.0);
  std::vector<double> mean(5, 0.0);
  std::vector<std::vector<double>> previous;
  for (const Peak& p : land.peaks()) previous.push_back(p.location);
  const int rounds = 1000;
  for (int i = 0; i < rounds; ++i) {
    land.advance();
    for (std::size_t k = 0; k < land.peaks().size(); ++k) {
      for (int d = 0; d < 5; ++d) {
        mean[static_cast<std::size_t>(d)] +=
            land.peaks()[k].location[static_cast<std::size_t>(d)] -
            previous[k][static_cast<std::size_t>(d)];
      }
      previous[k] = land.peaks()[k].location;
    }
  }
  for (double m : mean) {
    CHECK(std::abs(m / (rounds * 10)) < 0.05);
  }
}
