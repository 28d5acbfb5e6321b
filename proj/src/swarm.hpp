#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace dcpso {

// Fitness lookup used by everything that consumes evaluation budget.
using Evaluator = std::function<double(std::span<const double>)>;

struct PsoParams {
  double w_max = 0.6;
  double w_min = 0.3;
  double eta1 = 1.7;   // cognitive acceleration constant
  double eta2 = 1.7;   // social acceleration constant
  double v_max = 50.0; // per-dimension velocity clamp
};

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> pbest_position;
  double pbest_fitness = 0.0;
};

// A sub-swarm exploring one region; lbest plays the gbest role inside it.
struct Cluster {
  std::vector<Particle> members;
  std::vector<double> lbest_position;
  double lbest_fitness = 0.0;

  std::size_t size() const { return members.size(); }
};

struct ClusterGeometry {
  std::vector<double> center;
  double radius = 0.0;
};

// Linearly decreasing inertia: w_max at c_itr = 0 down to w_min at
// c_itr = r_itr. Throws std::invalid_argument when r_itr < 1.
double inertia(double w_max, double w_min, int c_itr, int r_itr);

// Iterations left before the environment change, at the live population
// size: floor((u_cf - evals) / p_size), floored at 1. Throws on p_size < 1.
int remaining_iterations(std::int64_t u_cf, std::int64_t evals, int p_size);

// One velocity/position update against the cluster's lbest. Fresh r1, r2
// are drawn per dimension from unit_rand() in [0,1). Velocity components
// are clamped to +/- v_max; positions are clamped to bounds and the clamped
// dimension's velocity is zeroed.
template <class UnitRand>
void step_particle(Particle& p, std::span<const double> lbest, double w,
                   const PsoParams& params, const Bounds& bounds,
                   UnitRand&& unit_rand) {
  for (std::size_t d = 0; d < p.position.size(); ++d) {
    const double r1 = unit_rand();
    const double r2 = unit_rand();
    double v = w * p.velocity[d] +
               params.eta1 * r1 * (p.pbest_position[d] - p.position[d]) +
               params.eta2 * r2 * (lbest[d] - p.position[d]);
    v = std::clamp(v, -params.v_max, params.v_max);
    double x = p.position[d] + v;
    if (x < bounds.low || x > bounds.high) {
      x = bounds.clamp(x);
      v = 0.0;
    }
    p.velocity[d] = v;
    p.position[d] = x;
  }
}

// Records the current position as pbest iff strictly better.
// Returns true when the pbest improved.
bool update_pbest(Particle& p, double new_fitness);

// Dimension-wise lbest update: each dimension of the cluster's lbest is
// replaced in turn by the candidate's value, the trial is evaluated (one
// budgeted evaluation per dimension), and improvements are committed before
// the next dimension is tested. If after the sweep the candidate's own
// fitness still beats the lbest, the candidate is committed wholesale (its
// fitness is already known, so no extra evaluation is spent); this keeps
// lbest at or above every member pbest even on non-separable landscapes.
void learn_lbest_dimensionwise(Cluster& c, std::span<const double> candidate,
                               double candidate_fitness, const Evaluator& evaluate);

// Mean of member positions and max member distance from that mean.
ClusterGeometry cluster_geometry(const Cluster& c);

}  // namespace dcpso
