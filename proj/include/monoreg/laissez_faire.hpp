#pragma once

#include <cstdint>
#include <vector>

#include "monoreg/environment.hpp"
#include "monoreg/parallel_for.hpp"

namespace monoreg {

// Unregulated monopoly benchmark: quantity/price/profit schedules over cost
// and the exclusion cutoff where gross profit no longer covers the fixed cost.
struct LaissezFaireSchedule {
  double cutoff = 1.0;  // active for c <= cutoff
  std::vector<double> c, q, price, profit;  // profit net of the fixed cost
  std::uint64_t env_fingerprint = 0;
};

// Unique solution q of P(q) + q P'(q) = c in (0, q_max); 0 when marginal
// revenue at 0+ is already below c. Ignores the fixed cost.
double monopoly_quantity(const MarketEnvironment& env, double c);

// Largest c in (0, 1] whose gross monopoly profit covers the fixed cost.
// Throws std::runtime_error when even c = 0 cannot cover it.
double lf_cutoff(const MarketEnvironment& env);

LaissezFaireSchedule lf_schedule(const MarketEnvironment& env, int grid_n = 1025,
                                 Exec exec = Exec::Parallel);

// Gross profit [P(q_hat(c)) - c] q_hat(c) of the active monopolist.
double lf_gross_profit(const MarketEnvironment& env, double c);

}  // namespace monoreg
