#pragma once

#include <vector>

#include "monoreg/environment.hpp"
#include "monoreg/parallel_for.hpp"
#include "monoreg/tax_schedule.hpp"

namespace monoreg {

struct BestResponse {
  double c = 0.0;
  double p_opt = 0.0;
  double q_opt = 0.0;
  double profit = 0.0;
  bool active = false;
  bool at_benchmark = false;  // within 1e-6 of the benchmark price
};

// Profit-maximizing posted price against an arbitrary tax schedule:
// grid search over [0, v_bar] refined by golden section in the best bracket,
// ties broken toward the lowest price. The benchmark price and the
// prohibitive boundary are always included as exact candidates.
BestResponse best_response(const MarketEnvironment& env, const TaxSchedule& tax,
                           double c, int price_grid_n = 4096);

struct AuditRow {
  double c = 0.0;
  double p_opt = 0.0, q_opt = 0.0, profit = 0.0;
  double p_policy = 0.0;
  double price_dev = 0.0;   // |p_opt - p_policy|
  double profit_gap = 0.0;  // simulated optimum minus profit at the policy price
  Segment segment_guess = Segment::Excluded;
};

struct AuditReport {
  double max_price_dev = 0.0;
  double max_profit_gap = 0.0;
  double price_grid_step = 0.0;
  std::vector<AuditRow> rows;
};

// Replays the firm's problem under the emitted tax at every grid cost and
// compares against the policy's intended prices.
AuditReport ic_audit(const MarketEnvironment& env, const TaxSchedule& tax,
                     const RegulationPolicy& policy, int cost_grid_n = 1025,
                     int price_grid_n = 4096, Exec exec = Exec::Parallel);

}  // namespace monoreg
