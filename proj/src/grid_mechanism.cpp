#include "monoreg/grid_mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "monoreg/laissez_faire.hpp"
#include "monoreg/numerics.hpp"

namespace monoreg {

namespace {

constexpr double kActive = 1e-12;  // q above this pays the fixed cost

struct Discretization {
  const MarketEnvironment& env;
  int n;  // cells; nodes are 0..n
  double dc;
  std::vector<double> c, f, wt;

  Discretization(const MarketEnvironment& e, int cells) : env(e), n(cells) {
    dc = 1.0 / n;
    c.resize(n + 1);
    f.resize(n + 1);
    wt.assign(n + 1, 1.0);
    wt.front() = wt.back() = 0.5;
    for (int i = 0; i <= n; ++i) {
      c[i] = static_cast<double>(i) / n;
      f[i] = env.cost.pdf(c[i]);
    }
  }

  // Pi_i = trapezoid of q over [c_i, 1]; Pi_n = 0
  std::vector<double> profits(const std::vector<double>& q) const {
    std::vector<double> pi(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i) pi[i] = pi[i + 1] + 0.5 * dc * (q[i] + q[i + 1]);
    return pi;
  }

  double objective(const std::vector<double>& q) const {
    const auto pi = profits(q);
    double w = 0.0;
    for (int i = 0; i <= n; ++i)
      w += wt[i] * f[i] * dc *
           (env.demand.consumer_value(q[i]) - c[i] * q[i] - (1.0 - env.alpha) * pi[i]);
    return w;
  }

  std::vector<double> slack(const std::vector<double>& q) const {
    const auto pi = profits(q);
    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) {
      const double rev = q[i] > 0.0 ? q[i] * (env.demand.price(q[i]) - c[i]) : 0.0;
      g[i] = rev - (q[i] > kActive ? env.fixed_cost : 0.0) - pi[i];
    }
    return g;
  }
};

}  // namespace

GridMechanism brute_force_mechanism(const MarketEnvironment& env, int n_cells,
                                    int max_iters, std::uint64_t seed) {
  if (n_cells < 10 || n_cells > 200)
    throw std::invalid_argument("brute_force_mechanism: n_cells must be in [10, 200]");
  const Discretization d(env, n_cells);
  const int n = n_cells;
  const double q_max = env.demand.q_max();

  // feasible interior start: laissez-faire truncated below its own cutoff
  const double lf_cut = lf_cutoff(env);
  std::vector<double> q_feas(n + 1, 0.0);
  for (int i = 0; i <= n; ++i)
    if (d.c[i] <= 0.7 * lf_cut) q_feas[i] = monopoly_quantity(env, d.c[i]);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.55, 0.95);
    for (int i = 0; i <= n; ++i) q_feas[i] *= u(rng);
    project_nonincreasing(q_feas);
  }

  std::vector<double> q = q_feas;
  std::vector<double> lambda(n + 1, 0.0);
  double rho = 1.0;
  int steps = 0;
  bool converged = false;

  // augmented-Lagrangian merit for the inequality rows g_i >= 0
  const auto merit = [&](const std::vector<double>& x) {
    const auto g = d.slack(x);
    double pen = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double m = std::max(0.0, lambda[i] - rho * g[i]);
      pen -= (m * m - lambda[i] * lambda[i]) / (2.0 * rho);
    }
    return d.objective(x) + pen;
  };

  // dPi_i/dq_j: dc/2 on the diagonal (i = j < n), dc for i < j < n,
  // dc/2 in the top column j = n; row n is identically zero.
  const auto merit_gradient = [&](const std::vector<double>& x) {
    const auto pi = d.profits(x);
    std::vector<double> grad(n + 1), row(n + 1);
    for (int i = 0; i <= n; ++i) {
      const double price = env.demand.price(x[i]);
      const double g = (x[i] > 0.0 ? x[i] * (price - d.c[i]) : 0.0) -
                       (x[i] > kActive ? env.fixed_cost : 0.0) - pi[i];
      const double mult = std::max(0.0, lambda[i] - rho * g);
      grad[i] = d.wt[i] * (price - d.c[i]) * d.f[i] * d.dc +
                mult * (price + x[i] * env.demand.price_slope(x[i]) - d.c[i]);
      // weight this row puts on Pi_i, from the objective and from the slack
      row[i] = (1.0 - env.alpha) * d.wt[i] * d.f[i] * d.dc + mult;
    }
    double below = 0.0;  // sum of row weights for i < j
    for (int j = 0; j <= n; ++j) {
      if (j < n)
        grad[j] -= below * d.dc + row[j] * 0.5 * d.dc;
      else
        grad[j] -= below * 0.5 * d.dc;
      below += row[j];
    }
    return grad;
  };

  double step = 1.0;
  double m0 = merit(q);
  const int outer_rounds = 80;
  const int inner_budget = std::max(max_iters / outer_rounds, 50);
  for (int outer = 0; outer < outer_rounds; ++outer) {
    const double before = m0;
    for (int it = 0; it < inner_budget && steps < max_iters; ++it) {
      const auto grad = merit_gradient(q);
      bool improved = false;
      std::vector<double> trial(n + 1);
      for (int bt = 0; bt < 60; ++bt) {
        for (int i = 0; i <= n; ++i)
          trial[i] = std::clamp(q[i] + step * grad[i], 0.0, q_max);
        project_nonincreasing(trial);
        const double mt = merit(trial);
        if (mt > m0 + 1e-16) {
          q.swap(trial);
          m0 = mt;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      ++steps;
      if (!improved) break;
      step *= 1.4;
    }
    const auto g = d.slack(q);
    for (int i = 0; i <= n; ++i) lambda[i] = std::max(0.0, lambda[i] - rho * g[i]);
    if (outer % 3 == 2) rho = std::min(rho * 2.0, 1e7);
    m0 = merit(q);  // multipliers moved, so the merit of q did too
    const double min_g = *std::min_element(g.begin(), g.end());
    if (outer > 10 && min_g > -1e-10 && std::abs(m0 - before) < 1e-10) {
      converged = true;
      break;
    }
  }

  // clear any residual violation: bisection shrink toward the interior start
  {
    const auto g = d.slack(q);
    if (*std::min_element(g.begin(), g.end()) < -1e-10) {
      double lo = 0.0, hi = 1.0;
      std::vector<double> trial(n + 1);
      for (int bt = 0; bt < 60; ++bt) {
        const double t = 0.5 * (lo + hi);
        for (int i = 0; i <= n; ++i) trial[i] = q[i] + t * (q_feas[i] - q[i]);
        const auto gt = d.slack(trial);
        if (*std::min_element(gt.begin(), gt.end()) >= 0.0)
          hi = t;
        else
          lo = t;
      }
      for (int i = 0; i <= n; ++i) q[i] += hi * (q_feas[i] - q[i]);
      project_nonincreasing(q);
    }
  }

  GridMechanism out;
  out.c = d.c;
  out.q = q;
  out.pi = d.profits(q);
  out.slack = d.slack(q);
  out.objective = d.objective(q);
  out.converged = converged;
  out.gradient_steps = steps;
  return out;
}

}  // namespace monoreg
