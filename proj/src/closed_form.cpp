#include "monoreg/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace monoreg {

namespace {

// Simpson on [a, b]; exact for integrands of degree <= 3.
template <class F>
double simpson_exact(F&& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

// monomial coefficients of the cubic through four samples
std::array<double, 4> cubic_through(const std::array<double, 4>& x,
                                    const std::array<double, 4>& y) {
  double m[4][5];
  for (int i = 0; i < 4; ++i) {
    double t = 1.0;
    for (int j = 0; j < 4; ++j) {
      m[i][j] = t;
      t *= x[i];
    }
    m[i][4] = y[i];
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double s = m[r][col] / m[col][col];
      for (int j = col; j < 5; ++j) m[r][j] -= s * m[col][j];
    }
  }
  return {m[0][4] / m[0][0], m[1][4] / m[1][1], m[2][4] / m[2][2], m[3][4] / m[3][3]};
}

}  // namespace

double ClosedFormLinearUniform::c_hat_of(double c_bar) const {
  const double w = 2.0 * (2.0 - alpha);
  return std::max(((w + 1.0) * c_bar - 2.0 * A) / (w - 1.0), 0.0);
}

double ClosedFormLinearUniform::q_flat_of(double c_bar) const {
  const double ch = c_hat_of(c_bar);
  return (2.0 - alpha) * (c_bar - ch) / B;
}

double ClosedFormLinearUniform::welfare_of(double c_bar) const {
  const double ch = c_hat_of(c_bar);
  const double w = 2.0 - alpha;
  const double qf = q_flat_of(c_bar);
  const auto V = [&](double q) { return A * q - 0.5 * B * q * q; };
  const auto q_tax = [&](double c) { return w * (c_bar - c) / B; };
  const auto pi_tax = [&](double c) { return 0.5 * w * (c_bar - c) * (c_bar - c) / B; };
  const double pi_hat = pi_tax(ch);

  double total = 0.0;
  if (ch > 0.0) {
    total += simpson_exact(
        [&](double c) {
          const double pi = pi_hat + (ch - c) * qf;
          return V(qf) - c * qf - (1.0 - alpha) * pi;
        },
        0.0, ch);
  }
  total += simpson_exact(
      [&](double c) {
        const double q = q_tax(c);
        return V(q) - c * q - (1.0 - alpha) * pi_tax(c);
      },
      ch, c_bar);
  return total;
}

double ClosedFormLinearUniform::q_star(double c) const {
  if (c > c_bar_star) return 0.0;
  if (c <= c_hat) return q_flat;
  return (2.0 - alpha) * (c_bar_star - c) / B;
}

double ClosedFormLinearUniform::p_star(double c) const {
  if (c > c_bar_star) return A;  // no trade
  if (c <= c_hat) return p_hat;
  return 0.5 * (c + c_bar_star);
}

double ClosedFormLinearUniform::consumer_price(double c) const {
  return A - B * q_star(c);
}

double ClosedFormLinearUniform::tau(double p) const {
  if (p <= p_hat) return 0.0;
  if (p > p_star(c_bar_star)) return A;  // prohibitive
  const double w = 2.0 * (2.0 - alpha);
  return A - w * c_bar_star + (w - 1.0) * p;
}

ClosedFormLinearUniform closed_form_policy(double A, double B, double alpha) {
  if (!(A > 0.0) || A > 1.0 + 1e-12 || A > 2.0 * B + 1e-12 || alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("closed_form_policy: need 0 < A <= 1, A <= 2B, alpha in [0, 1]");

  ClosedFormLinearUniform cf;
  cf.A = A;
  cf.B = B;
  cf.alpha = alpha;

  // welfare is cubic in the cutoff on each regime; collect stationary points
  const double split = 2.0 * A / (2.0 * (2.0 - alpha) + 1.0);  // interior bunching boundary appears
  std::vector<double> candidates = {split, A};
  const auto add_stationary = [&](double lo, double hi) {
    if (!(hi - lo > 1e-9)) return;
    const double h = (hi - lo) / 3.0;
    std::array<double, 4> xs = {lo, lo + h, lo + 2.0 * h, hi};
    std::array<double, 4> ys;
    for (int i = 0; i < 4; ++i) ys[i] = cf.welfare_of(xs[i]);
    const auto co = cubic_through(xs, ys);
    // roots of 3 a3 x^2 + 2 a2 x + a1
    const double a = 3.0 * co[3], b = 2.0 * co[2], c = co[1];
    if (std::abs(a) < 1e-14) {
      if (std::abs(b) > 1e-14) candidates.push_back(-c / b);
      return;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return;
    const double r = std::sqrt(disc);
    for (double root : {(-b + r) / (2.0 * a), (-b - r) / (2.0 * a)})
      if (root > lo - 1e-12 && root < hi + 1e-12) candidates.push_back(std::clamp(root, lo, hi));
  };
  add_stationary(0.0, split);
  add_stationary(split, A);

  double best_c = split, best_w = -1e300;
  for (double cb : candidates) {
    if (!(cb > 0.0) || cb > A) continue;
    const double w = cf.welfare_of(cb);
    if (w > best_w) { best_w = w; best_c = cb; }
  }

  cf.c_bar_star = best_c;
  cf.welfare = best_w;
  cf.c_hat = cf.c_hat_of(best_c);
  cf.c_hat_clamped = cf.c_hat == 0.0 && best_c < split;
  cf.q_flat = cf.q_flat_of(best_c);
  cf.p_hat = A - B * cf.q_flat;
  cf.c_L = 0.0;
  return cf;
}

}  // namespace monoreg
