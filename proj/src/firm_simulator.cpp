#include "monoreg/firm_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monoreg/numerics.hpp"

namespace monoreg {

namespace {

constexpr double kBenchmarkBand = 1e-6;

double net_profit(const MarketEnvironment& env, const TaxSchedule& tax, double c, double p) {
  const double q = regulated_demand(tax, env.demand, p);
  if (q <= 0.0) return 0.0;
  return (p - c) * q - env.fixed_cost;
}

}  // namespace

BestResponse best_response(const MarketEnvironment& env, const TaxSchedule& tax,
                           double c, int price_grid_n) {
  if (price_grid_n < 1024) throw std::invalid_argument("best_response: price_grid_n must be >= 1024");
  const double v_bar = env.demand.v_bar();
  const int n = price_grid_n;
  const double step = v_bar / (n - 1);

  int best = 0;
  double best_profit = net_profit(env, tax, c, 0.0);
  for (int j = 1; j < n; ++j) {
    const double pr = net_profit(env, tax, c, step * j);
    if (pr > best_profit) { best_profit = pr; best = j; }  // keep the lowest maximizer
  }

  // refine inside the surrounding bracket; the profit is piecewise smooth there
  const double lo = std::max(0.0, step * (best - 1));
  const double hi = std::min(v_bar, step * (best + 1));
  double p_opt = golden_max([&](double p) { return net_profit(env, tax, c, p); }, lo, hi, 1e-10);
  double profit = net_profit(env, tax, c, p_opt);

  // exact kink candidates beat the refined point on ties toward lower prices
  for (double cand : {tax.p_hat(), tax.prohibitive_from()}) {
    if (cand < 0.0 || cand > v_bar) continue;
    const double pr = net_profit(env, tax, c, cand);
    if (pr > profit + 1e-14 || (pr > profit - 1e-14 && cand < p_opt)) {
      p_opt = cand;
      profit = pr;
    }
  }

  BestResponse br;
  br.c = c;
  if (profit < 0.0) {  // shutting down is available and strictly better
    br.active = false;
    br.p_opt = v_bar;
    br.q_opt = 0.0;
    br.profit = 0.0;
  } else {
    br.active = regulated_demand(tax, env.demand, p_opt) > 0.0;
    br.p_opt = p_opt;
    br.q_opt = regulated_demand(tax, env.demand, p_opt);
    br.profit = profit;
  }
  br.at_benchmark = br.active && std::abs(br.p_opt - tax.p_hat()) <= kBenchmarkBand;
  return br;
}

AuditReport ic_audit(const MarketEnvironment& env, const TaxSchedule& tax,
                     const RegulationPolicy& policy, int cost_grid_n,
                     int price_grid_n, Exec exec) {
  AuditReport rep;
  rep.price_grid_step = env.demand.v_bar() / (price_grid_n - 1);
  rep.rows.resize(cost_grid_n);
  parallel_for(static_cast<std::size_t>(cost_grid_n), exec, [&](std::size_t i) {
    const double c = static_cast<double>(i) / (cost_grid_n - 1);
    const BestResponse br = best_response(env, tax, c, price_grid_n);
    AuditRow row;
    row.c = c;
    row.p_opt = br.p_opt;
    row.q_opt = br.q_opt;
    row.profit = br.profit;
    row.p_policy = policy.p_at(c);
    row.price_dev = std::abs(br.p_opt - row.p_policy);
    row.profit_gap = br.profit - std::max(net_profit(env, tax, c, row.p_policy), 0.0);
    if (!br.active)
      row.segment_guess = Segment::Excluded;
    else if (br.at_benchmark)
      row.segment_guess = Segment::Bunch;
    else if (br.p_opt < tax.p_hat())
      row.segment_guess = Segment::LaissezFaire;
    else
      row.segment_guess = Segment::Taxed;
    rep.rows[i] = row;
  });
  for (const auto& row : rep.rows) {
    rep.max_price_dev = std::max(rep.max_price_dev, row.price_dev);
    rep.max_profit_gap = std::max(rep.max_profit_gap, row.profit_gap);
  }
  return rep;
}

}  // namespace monoreg
