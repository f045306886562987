#include "monoreg/demand.hpp"

#include <cmath>
#include <stdexcept>

#include "monoreg/interpolation.hpp"
#include "monoreg/numerics.hpp"

namespace monoreg {

struct DemandCurve::Impl {
  std::string family;
  std::vector<double> params;
  double q_max = 0.0;
  double v_bar = 0.0;

  virtual ~Impl() = default;
  virtual double price(double q) const = 0;
  virtual double price_slope(double q) const = 0;
  virtual double quantity(double p) const = 0;
  virtual double consumer_value(double q) const = 0;
};

namespace {

void check_q(double q, double q_max) {
  if (!(q >= 0.0) || q > q_max * (1.0 + 1e-12))
    throw std::domain_error("DemandCurve: quantity outside [0, q_max]");
}

void check_p(double p, double v_bar) {
  if (!(p >= 0.0) || p > v_bar * (1.0 + 1e-12))
    throw std::domain_error("DemandCurve: price outside [0, v_bar]");
}

struct LinearImpl final : DemandCurve::Impl {
  double A, B;
  LinearImpl(double A_, double B_) : A(A_), B(B_) {
    if (!(A > 0.0) || !(B > 0.0)) throw std::invalid_argument("linear demand: A, B must be > 0");
    family = "linear";
    params = {A, B};
    q_max = A / B;
    v_bar = A;
  }
  double price(double q) const override {
    check_q(q, q_max);
    return std::max(A - B * q, 0.0);
  }
  double price_slope(double q) const override {
    check_q(q, q_max);
    return -B;
  }
  double quantity(double p) const override {
    check_p(p, v_bar);
    return (A - p) / B;
  }
  double consumer_value(double q) const override {
    check_q(q, q_max);
    return A * q - 0.5 * B * q * q;
  }
};

struct ConstantElasticImpl final : DemandCurve::Impl {
  double theta, eta, eps;
  double q_cap;  // quantity at which the v_bar ceiling binds
  ConstantElasticImpl(double theta_, double eta_, double eps_, double vb) {
    theta = theta_; eta = eta_; eps = eps_;
    if (!(theta > 0.0) || !(eta > 1.0) || !(eps > 0.0))
      throw std::invalid_argument("constant-elastic demand: need theta > 0, eta > 1, epsilon > 0");
    v_bar = vb > 0.0 ? vb : 10.0 * theta;
    family = "constant-elastic";
    params = {theta, eta, eps, v_bar};
    q_max = std::pow(theta / eps, eta);
    q_cap = std::pow(theta / (v_bar + eps), eta);
  }
  double raw(double q) const { return theta * std::pow(q, -1.0 / eta) - eps; }
  double price(double q) const override {
    check_q(q, q_max);
    if (q <= q_cap) return v_bar;
    return std::min(std::max(raw(q), 0.0), v_bar);
  }
  double price_slope(double q) const override {
    check_q(q, q_max);
    if (q <= q_cap) return 0.0;
    return -(theta / eta) * std::pow(q, -1.0 / eta - 1.0);
  }
  double quantity(double p) const override {
    check_p(p, v_bar);
    if (p >= v_bar) return 0.0;
    return std::min(std::pow(theta / (p + eps), eta), q_max);
  }
  double consumer_value(double q) const override {
    check_q(q, q_max);
    const double qa = std::min(q, q_cap);
    double v = v_bar * qa;
    if (q > q_cap) {
      const double ex = 1.0 - 1.0 / eta;
      v += theta / ex * (std::pow(q, ex) - std::pow(q_cap, ex)) - eps * (q - q_cap);
    }
    return v;
  }
};

struct LogImpl final : DemandCurve::Impl {
  double mu, beta;
  double q_cap;
  LogImpl(double mu_, double beta_, double vb) : mu(mu_), beta(beta_) {
    if (!(beta > 0.0)) throw std::invalid_argument("logarithmic demand: beta must be > 0");
    v_bar = vb > 0.0 ? vb : mu + 20.0 * beta;
    if (!(v_bar > mu)) throw std::invalid_argument("logarithmic demand: v_bar must exceed mu");
    family = "logarithmic";
    params = {mu, beta, v_bar};
    q_max = std::exp(mu / beta);
    q_cap = std::exp((mu - v_bar) / beta);
  }
  double price(double q) const override {
    check_q(q, q_max);
    if (q <= q_cap) return v_bar;
    return std::max(mu - beta * std::log(q), 0.0);
  }
  double price_slope(double q) const override {
    check_q(q, q_max);
    if (q <= q_cap) return 0.0;
    return -beta / q;
  }
  double quantity(double p) const override {
    check_p(p, v_bar);
    if (p >= v_bar) return 0.0;
    return std::exp((mu - p) / beta);
  }
  double consumer_value(double q) const override {
    check_q(q, q_max);
    const double qa = std::min(q, q_cap);
    double v = v_bar * qa;
    if (q > q_cap) {
      // integral of mu - beta log x is (mu + beta) x - beta x log x
      const auto anti = [&](double x) { return (mu + beta) * x - beta * x * std::log(x); };
      v += anti(q) - anti(q_cap);
    }
    return v;
  }
};

struct TabulatedImpl final : DemandCurve::Impl {
  MonotoneCubic p_of_q;
  std::vector<double> knot_q, knot_v;  // cumulative consumer value at knots

  TabulatedImpl(std::vector<double> q, std::vector<double> p) {
    if (q.size() != p.size() || q.size() < 4)
      throw std::invalid_argument("tabulated demand: need >= 4 matching (q, p) knots");
    if (q.front() != 0.0) throw std::invalid_argument("tabulated demand: first knot must be q = 0");
    for (std::size_t i = 1; i < p.size(); ++i)
      if (!(p[i] < p[i - 1])) throw std::invalid_argument("tabulated demand: p must be strictly decreasing");
    family = "tabulated";
    v_bar = p.front();
    q_max = q.back();
    knot_q = q;
    p_of_q = MonotoneCubic(std::move(q), std::move(p));
    // cumulative integral of the interpolant, per-cell Simpson
    knot_v.assign(knot_q.size(), 0.0);
    for (std::size_t i = 1; i < knot_q.size(); ++i)
      knot_v[i] = knot_v[i - 1] + integrate([this](double x) { return p_of_q(x); },
                                            knot_q[i - 1], knot_q[i], 1e-13);
  }
  double price(double q) const override {
    check_q(q, q_max);
    return p_of_q(q);
  }
  double price_slope(double q) const override {
    check_q(q, q_max);
    return p_of_q.derivative(q);
  }
  double quantity(double p) const override {
    check_p(p, v_bar);
    return p_of_q.inverse(p);
  }
  double consumer_value(double q) const override {
    check_q(q, q_max);
    const auto it = std::upper_bound(knot_q.begin(), knot_q.end(), q);
    const std::size_t i = it == knot_q.begin() ? 0 : static_cast<std::size_t>(it - knot_q.begin()) - 1;
    return knot_v[i] + integrate([this](double x) { return p_of_q(x); }, knot_q[i], q, 1e-13);
  }
};

}  // namespace

DemandCurve DemandCurve::linear(double A, double B) {
  return DemandCurve(std::make_shared<LinearImpl>(A, B));
}
DemandCurve DemandCurve::constant_elastic(double theta, double eta, double epsilon, double v_bar) {
  return DemandCurve(std::make_shared<ConstantElasticImpl>(theta, eta, epsilon, v_bar));
}
DemandCurve DemandCurve::logarithmic(double mu, double beta, double v_bar) {
  return DemandCurve(std::make_shared<LogImpl>(mu, beta, v_bar));
}
DemandCurve DemandCurve::tabulated(std::vector<double> q, std::vector<double> p) {
  return DemandCurve(std::make_shared<TabulatedImpl>(std::move(q), std::move(p)));
}

double DemandCurve::price(double q) const { return impl_->price(q); }
double DemandCurve::price_slope(double q) const { return impl_->price_slope(q); }
double DemandCurve::quantity(double p) const { return impl_->quantity(p); }
double DemandCurve::consumer_value(double q) const { return impl_->consumer_value(q); }
double DemandCurve::q_max() const { return impl_->q_max; }
double DemandCurve::v_bar() const { return impl_->v_bar; }
const std::string& DemandCurve::family() const { return impl_->family; }
const std::vector<double>& DemandCurve::params() const { return impl_->params; }

}  // namespace monoreg
