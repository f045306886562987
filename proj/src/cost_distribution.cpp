#include "monoreg/cost_distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "monoreg/interpolation.hpp"

namespace monoreg {

struct CostDistribution::Impl {
  std::string family;
  std::vector<double> params;
  virtual ~Impl() = default;
  virtual double cdf(double c) const = 0;
  virtual double pdf(double c) const = 0;
  virtual double pdf_slope(double c) const = 0;
};

namespace {

void check_c(double c) {
  if (!(c >= 0.0) || c > 1.0 + 1e-12)
    throw std::domain_error("CostDistribution: cost outside [0, 1]");
}

struct UniformImpl final : CostDistribution::Impl {
  UniformImpl() {
    family = "uniform";
  }
  double cdf(double c) const override { check_c(c); return c; }
  double pdf(double c) const override { check_c(c); return 1.0; }
  double pdf_slope(double c) const override { check_c(c); return 0.0; }
};

struct TruncNormalImpl final : CostDistribution::Impl {
  double mu, sigma, mass0, mass;  // mass of the untruncated normal on [0, 1]
  TruncNormalImpl(double mean, double variance) : mu(mean), sigma(std::sqrt(variance)) {
    if (!(variance > 0.0)) throw std::invalid_argument("truncated-normal: variance must be > 0");
    family = "truncated-normal";
    params = {mean, variance};
    mass0 = raw_cdf(0.0);
    mass = raw_cdf(1.0) - mass0;
  }
  double raw_cdf(double c) const {
    return 0.5 * (1.0 + std::erf((c - mu) / (sigma * std::sqrt(2.0))));
  }
  double raw_pdf(double c) const {
    const double z = (c - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
  }
  double cdf(double c) const override { check_c(c); return (raw_cdf(c) - mass0) / mass; }
  double pdf(double c) const override { check_c(c); return raw_pdf(c) / mass; }
  double pdf_slope(double c) const override {
    check_c(c);
    return -(c - mu) / (sigma * sigma) * raw_pdf(c) / mass;
  }
};

struct TruncExpImpl final : CostDistribution::Impl {
  double lambda, norm;
  explicit TruncExpImpl(double rate) : lambda(rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("truncated-exponential: rate must be > 0");
    family = "truncated-exponential";
    params = {rate};
    norm = 1.0 - std::exp(-lambda);
  }
  double cdf(double c) const override { check_c(c); return (1.0 - std::exp(-lambda * c)) / norm; }
  double pdf(double c) const override { check_c(c); return lambda * std::exp(-lambda * c) / norm; }
  double pdf_slope(double c) const override {
    check_c(c);
    return -lambda * lambda * std::exp(-lambda * c) / norm;
  }
};

struct TabulatedImpl final : CostDistribution::Impl {
  MonotoneCubic F_of_c;
  TabulatedImpl(std::vector<double> c, std::vector<double> F) {
    if (c.size() != F.size() || c.size() < 4)
      throw std::invalid_argument("tabulated cost: need >= 4 matching (c, F) knots");
    if (c.front() != 0.0 || c.back() != 1.0)
      throw std::invalid_argument("tabulated cost: support must be [0, 1]");
    if (std::abs(F.front()) > 1e-12 || std::abs(F.back() - 1.0) > 1e-12)
      throw std::invalid_argument("tabulated cost: F(0) = 0 and F(1) = 1 required");
    for (std::size_t i = 1; i < F.size(); ++i)
      if (F[i] < F[i - 1]) throw std::invalid_argument("tabulated cost: F must be nondecreasing");
    family = "tabulated";
    F_of_c = MonotoneCubic(std::move(c), std::move(F));
  }
  double cdf(double c) const override { check_c(c); return F_of_c(c); }
  double pdf(double c) const override { check_c(c); return std::max(F_of_c.derivative(c), 0.0); }
  double pdf_slope(double c) const override {
    check_c(c);
    const double h = 1e-6;
    const double lo = std::max(c - h, 0.0), hi = std::min(c + h, 1.0);
    return (pdf(hi) - pdf(lo)) / (hi - lo);
  }
};

}  // namespace

CostDistribution CostDistribution::uniform() {
  return CostDistribution(std::make_shared<UniformImpl>());
}
CostDistribution CostDistribution::truncated_normal(double mean, double variance) {
  return CostDistribution(std::make_shared<TruncNormalImpl>(mean, variance));
}
CostDistribution CostDistribution::truncated_exponential(double rate) {
  return CostDistribution(std::make_shared<TruncExpImpl>(rate));
}
CostDistribution CostDistribution::tabulated(std::vector<double> c, std::vector<double> F) {
  return CostDistribution(std::make_shared<TabulatedImpl>(std::move(c), std::move(F)));
}

double CostDistribution::cdf(double c) const { return impl_->cdf(c); }
double CostDistribution::pdf(double c) const { return impl_->pdf(c); }
double CostDistribution::pdf_slope(double c) const { return impl_->pdf_slope(c); }
const std::string& CostDistribution::family() const { return impl_->family; }
const std::vector<double>& CostDistribution::params() const { return impl_->params; }

}  // namespace monoreg
