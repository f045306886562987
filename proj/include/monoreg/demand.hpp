#pragma once

#include <memory>
#include <string>
#include <vector>

namespace monoreg {

// Inverse market demand P on [0, q_max], strictly decreasing from v_bar to 0.
// Immutable value type; cheap to copy and safe to share across workers.
class DemandCurve {
 public:
  // P(q) = A - B q on [0, A/B].
  static DemandCurve linear(double A, double B);

  // P(q) = min(max(theta q^(-1/eta) - epsilon, 0), v_bar), eta > 1.
  // The epsilon shift and the v_bar ceiling make the curve reach both
  // boundary values on a finite domain q_max = (theta/epsilon)^eta.
  static DemandCurve constant_elastic(double theta, double eta,
                                      double epsilon = 1e-6, double v_bar = 0.0);

  // P(q) = min(mu - beta log q, v_bar) on (0, exp(mu/beta)].
  // Default ceiling mu + 20 beta puts the capped piece below q ~ 2e-9,
  // invisible to the evaluation grids.
  static DemandCurve logarithmic(double mu, double beta, double v_bar = 0.0);

  // Sampled (q, p) knots, p strictly decreasing; monotone cubic between knots.
  static DemandCurve tabulated(std::vector<double> q, std::vector<double> p);

  double price(double q) const;        // P(q)
  double price_slope(double q) const;  // P'(q)
  double quantity(double p) const;     // P^{-1}(p); 0 at p >= v_bar
  double consumer_value(double q) const;  // V(q) = integral of P on [0, q]
  double marginal_revenue(double q) const { return price(q) + q * price_slope(q); }

  double q_max() const;
  double v_bar() const;

  const std::string& family() const;
  const std::vector<double>& params() const;

 private:
  struct Impl;
  explicit DemandCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace monoreg
