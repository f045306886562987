#include "monoreg/tax_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace monoreg {

TaxSchedule TaxSchedule::from_policy(const RegulationPolicy& policy) {
  const double c_hat = policy.c_hat();
  const double c_bar = policy.c_bar();
  if (!(c_hat < c_bar)) throw std::invalid_argument("TaxSchedule: taxed segment is empty");

  TaxSchedule t;
  t.policy_backed_ = true;
  t.p_hat_ = policy.p_hat;

  std::vector<double> costs, prices, cprices;
  const auto& c = policy.inner.c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < c_hat || c[i] > c_bar) continue;
    const double p = policy.p[i];
    if (!prices.empty() && !(p > prices.back())) {
      if (p == prices.back()) continue;  // duplicate node
      throw std::runtime_error("TaxSchedule: price schedule not strictly increasing on taxed segment");
    }
    costs.push_back(c[i]);
    prices.push_back(p);
    cprices.push_back(policy.consumer_price[i]);
    t.knots_.push_back({p, std::max(policy.consumer_price[i] - p, 0.0), c[i]});
  }
  if (t.knots_.size() < 4)
    throw std::runtime_error("TaxSchedule: too few taxed knots to interpolate");

  t.cost_of_price_ = MonotoneCubic(prices, costs);
  t.consumer_price_of_cost_ = MonotoneCubic(costs, cprices);
  t.prohibitive_from_ = prices.back();
  t.prohibitive_tax_ = policy.inner.env.demand.v_bar();
  return t;
}

TaxSchedule TaxSchedule::from_knots(double p_hat, std::vector<TaxKnot> knots,
                                    double prohibitive_from, double prohibitive_tax) {
  TaxSchedule t;
  t.p_hat_ = p_hat;
  t.prohibitive_from_ = prohibitive_from;
  t.prohibitive_tax_ = prohibitive_tax;
  t.knots_ = std::move(knots);
  if (t.knots_.size() >= 2) {
    std::vector<double> p, tau;
    for (const auto& kn : t.knots_) {
      p.push_back(kn.price);
      tau.push_back(kn.tax);
    }
    t.tax_of_price_ = MonotoneCubic(std::move(p), std::move(tau));
  }
  return t;
}

double TaxSchedule::tau(double p) const {
  if (p <= p_hat_) return 0.0;
  if (p > prohibitive_from_) return prohibitive_tax_;
  if (policy_backed_) {
    const double c = cost_of_price_.inverse(p);
    return std::max(consumer_price_of_cost_(c) - p, 0.0);
  }
  if (tax_of_price_.empty()) return prohibitive_tax_;
  return std::max(tax_of_price_(p), 0.0);
}

double regulated_demand(const TaxSchedule& tax, const DemandCurve& demand, double p) {
  if (p < 0.0) throw std::domain_error("regulated_demand: negative price");
  const double consumer = p + tax.tau(p);
  if (consumer >= demand.v_bar()) return 0.0;
  return demand.quantity(consumer);
}

ProgressivityReport verify_progressive(const TaxSchedule& tax, const DemandCurve& demand) {
  ProgressivityReport rep;
  const double p_hat = tax.p_hat();

  // (i) no tax at or below the benchmark
  {
    double worst = 0.0;
    for (int i = 0; i <= 32; ++i) worst = std::max(worst, std::abs(tax.tau(p_hat * i / 32.0)));
    rep.zero_in_delegation = worst == 0.0;
  }

  // evaluation grid on the taxed range: knots above p_hat, else uniform
  std::vector<double> grid;
  for (const auto& kn : tax.knots())
    if (kn.price > p_hat + 1e-15) grid.push_back(kn.price);
  if (grid.size() < 2) {
    const double top = std::max(tax.prohibitive_from(), std::min(demand.v_bar(), p_hat + 1.0));
    for (int i = 1; i <= 64; ++i) grid.push_back(p_hat + (top - p_hat) * i / 64.0);
  }

  // (ii) positive and strictly increasing above the benchmark
  {
    bool positive = true;
    double min_step = std::numeric_limits<double>::infinity();
    double prev = 0.0;  // tau(p_hat)
    for (double p : grid) {
      const double t = tax.tau(p);
      positive = positive && t > 0.0;
      min_step = std::min(min_step, t - prev);
      prev = t;
    }
    rep.worst_monotonicity_violation = std::min(min_step, 0.0);
    rep.positive_increasing_above = positive && min_step > 0.0;
  }

  // (iii) the cap is soft: some taxed price keeps positive demand
  {
    bool soft = false;
    for (double p : grid) soft = soft || regulated_demand(tax, demand, p) > 0.0;
    rep.soft_cap = soft;
  }
  return rep;
}

}  // namespace monoreg
