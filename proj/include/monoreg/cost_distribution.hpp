#pragma once

#include <memory>
#include <string>
#include <vector>

namespace monoreg {

// Marginal-cost distribution on [0, 1]: CDF F, density f, density slope f'.
class CostDistribution {
 public:
  static CostDistribution uniform();
  static CostDistribution truncated_normal(double mean, double variance);
  static CostDistribution truncated_exponential(double rate);
  // Sampled CDF knots on [0, 1] with F(0) = 0, F(1) = 1, nondecreasing.
  static CostDistribution tabulated(std::vector<double> c, std::vector<double> F);

  double cdf(double c) const;
  double pdf(double c) const;
  double pdf_slope(double c) const;

  const std::string& family() const;
  const std::vector<double>& params() const;

 private:
  struct Impl;
  explicit CostDistribution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace monoreg
