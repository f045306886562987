#pragma once

#include <vector>

#include "monoreg/demand.hpp"
#include "monoreg/interpolation.hpp"
#include "monoreg/policy_solver.hpp"

namespace monoreg {

struct TaxKnot {
  double price = 0.0;  // firm price
  double tax = 0.0;    // unit tax at that price
  double cost = 0.0;   // source cost type (policy-backed schedules only)
};

// Unit tax as a function of the firm's posted price: zero up to the benchmark
// price, interpolated knots on the taxed range, prohibitive beyond it.
class TaxSchedule {
 public:
  TaxSchedule() = default;

  // Inverts the strictly increasing price schedule of the taxed segment and
  // reads the tax off the gap between consumer and firm prices. Throws if the
  // taxed segment is empty or its price schedule is not strictly increasing.
  static TaxSchedule from_policy(const RegulationPolicy& policy);

  // Ad-hoc schedule from (price, tax) knots; tax is interpolated monotonically
  // between knots, zero at or below p_hat, prohibitive above prohibitive_from.
  static TaxSchedule from_knots(double p_hat, std::vector<TaxKnot> knots,
                                double prohibitive_from, double prohibitive_tax);

  double tau(double p) const;

  double p_hat() const { return p_hat_; }
  double prohibitive_from() const { return prohibitive_from_; }
  double prohibitive_tax() const { return prohibitive_tax_; }
  const std::vector<TaxKnot>& knots() const { return knots_; }

 private:
  double p_hat_ = 0.0;
  double prohibitive_from_ = 0.0;
  double prohibitive_tax_ = 0.0;
  std::vector<TaxKnot> knots_;
  // policy-backed: tax evaluated through the inverse price map so the
  // schedule is exact at knots and monotone between them
  bool policy_backed_ = false;
  MonotoneCubic cost_of_price_;
  MonotoneCubic consumer_price_of_cost_;
  MonotoneCubic tax_of_price_;  // ad-hoc schedules
};

struct ProgressivityReport {
  bool zero_in_delegation = false;     // tau = 0 at and below p_hat
  bool positive_increasing_above = false;  // tau > 0 and strictly increasing
  bool soft_cap = false;               // some taxed price keeps positive demand
  double worst_monotonicity_violation = 0.0;  // most negative consecutive step
  bool progressive() const {
    return zero_in_delegation && positive_increasing_above && soft_cap;
  }
};

ProgressivityReport verify_progressive(const TaxSchedule& tax, const DemandCurve& demand);

// Demand faced by the firm at posted price p: P^{-1}(p + tau(p)), zero once
// the consumer price reaches v_bar.
double regulated_demand(const TaxSchedule& tax, const DemandCurve& demand, double p);

}  // namespace monoreg
