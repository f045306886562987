#include "monoreg/laissez_faire.hpp"

#include <cmath>
#include <stdexcept>

#include "monoreg/numerics.hpp"

namespace monoreg {

double monopoly_quantity(const MarketEnvironment& env, double c) {
  if (!(c >= 0.0) || c > 1.0 + 1e-12) throw std::domain_error("monopoly_quantity: c outside [0, 1]");
  const auto& d = env.demand;
  const double q_lo = 1e-14 * std::max(d.q_max(), 1.0);
  if (d.marginal_revenue(q_lo) <= c) return 0.0;
  const double q_hi = d.q_max() * (1.0 - 1e-12);
  if (d.marginal_revenue(q_hi) >= c) return q_hi;
  // marginal revenue is strictly decreasing under revenue concavity
  return find_root([&](double q) { return d.marginal_revenue(q) - c; }, q_lo, q_hi, 1e-12);
}

double lf_gross_profit(const MarketEnvironment& env, double c) {
  const double q = monopoly_quantity(env, c);
  return q > 0.0 ? (env.demand.price(q) - c) * q : 0.0;
}

double lf_cutoff(const MarketEnvironment& env) {
  const double k = env.fixed_cost;
  if (lf_gross_profit(env, 1.0) >= k) return 1.0;
  if (lf_gross_profit(env, 0.0) < k)
    throw std::runtime_error("lf_cutoff: fixed cost exceeds maximal gross profit");
  // gross profit is decreasing in c
  return find_root([&](double c) { return lf_gross_profit(env, c) - k; }, 0.0, 1.0, 1e-10);
}

LaissezFaireSchedule lf_schedule(const MarketEnvironment& env, int grid_n, Exec exec) {
  if (grid_n < 64) throw std::invalid_argument("lf_schedule: grid_n must be >= 64");
  LaissezFaireSchedule s;
  s.cutoff = lf_cutoff(env);
  s.env_fingerprint = env.fingerprint();
  const int n = grid_n;
  s.c.resize(n);
  s.q.resize(n);
  s.price.resize(n);
  s.profit.resize(n);
  const double v_bar = env.demand.v_bar();
  parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
    const double c = static_cast<double>(i) / (n - 1);
    s.c[i] = c;
    if (c <= s.cutoff) {
      const double q = monopoly_quantity(env, c);
      s.q[i] = q;
      s.price[i] = q > 0.0 ? env.demand.price(q) : v_bar;
      s.profit[i] = q > 0.0 ? (s.price[i] - c) * q - env.fixed_cost : 0.0;
    } else {
      s.q[i] = 0.0;
      s.price[i] = v_bar;
      s.profit[i] = 0.0;
    }
  });
  return s;
}

}  // namespace monoreg
