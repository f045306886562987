#pragma once

#include <cstdint>
#include <vector>

#include "monoreg/environment.hpp"

namespace monoreg {

// Discretized direct mechanism on endpoint cost nodes c_i = i/N: a quantity
// vector q with profits derived from the truthful-reporting envelope,
//   Pi_i = trapezoid of q over [c_i, 1]  (Pi_N = 0),
// maximizing the trapezoid expected welfare subject to q nonincreasing and
// the no-subsidy rows q_i P(q_i) - c_i q_i - k 1{q_i > 0} >= Pi_i.
struct GridMechanism {
  std::vector<double> c, q, pi, slack;
  double objective = 0.0;
  bool converged = false;
  int gradient_steps = 0;
};

// Projected ascent: gradient step on the augmented-Lagrangian merit, project
// onto the nonincreasing cone (pool-adjacent-violators), and finish with a
// bisection shrink toward a feasible interior point so every slack is clean.
// seed = 0 starts from a truncated laissez-faire schedule; a nonzero seed
// jitters that starting point (the optimum is unique, so this only exercises
// robustness).
GridMechanism brute_force_mechanism(const MarketEnvironment& env, int n_cells = 100,
                                    int max_iters = 40000, std::uint64_t seed = 0);

}  // namespace monoreg
