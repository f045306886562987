#pragma once

#include <vector>

#include "monoreg/environment.hpp"
#include "monoreg/laissez_faire.hpp"

namespace monoreg {

// Verdict on whether leaving the monopolist unregulated is optimal.
// The margin M(c) = [P(q_LF(c)) - c] f(c) - (1 - alpha) F(c) must be
// nondecreasing over the active cost range for laissez-faire to be optimal.
struct GateReport {
  bool lf_optimal = false;
  std::vector<double> c, margin;        // sampled M over [0, cutoff]
  double worst_violation = 0.0;         // most negative consecutive increase
  double worst_violation_at = 0.0;
  double margin_at_zero = 0.0;
  double tolerance = 0.0;
};

GateReport gate(const MarketEnvironment& env, const LaissezFaireSchedule& lf,
                int grid_n = 1025, double tol = 1e-9, Exec exec = Exec::Parallel);

// Monopoly markup P(q_LF(c)) - c sampled on [0, 1]; zero above the cutoff.
std::vector<std::pair<double, double>> markup_curve(const MarketEnvironment& env,
                                                    const LaissezFaireSchedule& lf,
                                                    int grid_n = 1025);

}  // namespace monoreg
