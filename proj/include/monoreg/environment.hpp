#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoreg/cost_distribution.hpp"
#include "monoreg/demand.hpp"

namespace monoreg {

// A market instance: demand curve, cost distribution, welfare weight on the
// firm's profit, and the fixed cost of operating.
struct MarketEnvironment {
  DemandCurve demand;
  CostDistribution cost;
  double alpha = 1.0;       // weight on firm profit in [0, 1]
  double fixed_cost = 0.0;  // k >= 0

  // Identifies the environment so derived artifacts can be matched to it.
  std::uint64_t fingerprint() const;
};

struct AssumptionCheck {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // worst-case margin; sign convention per check
  std::string detail;
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  int grid_n = 0;

  const AssumptionCheck& get(const std::string& name) const;
  bool core_pass() const;        // revenue concavity, boundaries, max revenue > k
  bool sufficiency_pass() const; // density nonincreasing + both log-concavity checks
};

// Grid-based verification of the standing assumptions on the environment and
// of the sufficiency hypotheses for progressivity of the optimal tax.
// Reported margins:
//   revenue_concavity        max centered second difference of q P(q)   (pass: < 0)
//   demand_boundaries        max(|P(0)-v_bar|, |P(q_max)|)              (pass: <= 1e-9)
//   max_revenue_covers_k     max_q q P(q) - k                           (pass: > 0)
//   density_nonincreasing    max forward difference of f                (pass: <= 1e-12)
//   density_log_concave      max second difference of log f             (pass: <= 1e-12)
//   inverse_demand_log_concave  max second difference of log P^{-1}(p)  (pass: < 0)
AssumptionReport check_assumptions(const MarketEnvironment& env, int grid_n = 2049);

}  // namespace monoreg
