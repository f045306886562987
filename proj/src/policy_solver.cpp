#include "monoreg/policy_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "monoreg/numerics.hpp"

namespace monoreg {

namespace {

constexpr double kSlackTol = 1e-8;
constexpr double kPiCellTol = 1e-13;
constexpr double kWelfareTol = 1e-10;

double q_taxed(const MarketEnvironment& env, double gamma, double c) {
  const double f = env.cost.pdf(c);
  if (f <= 0.0) return 0.0;  // virtual price diverges, no production
  const double ph = c + ((1.0 - env.alpha) * env.cost.cdf(c) + gamma) / f;
  if (ph >= env.demand.v_bar()) return 0.0;
  if (ph <= 0.0) return env.demand.q_max();
  return env.demand.quantity(ph);
}

}  // namespace

double terminal_quantity(const MarketEnvironment& env, double c_bar) {
  if (!(c_bar > 0.0) || c_bar > 1.0 + 1e-12)
    throw std::domain_error("terminal_quantity: c_bar outside (0, 1]");
  const double k = env.fixed_cost;
  if (k == 0.0) return 0.0;
  const double q_peak = monopoly_quantity(env, c_bar);
  const auto net = [&](double q) { return q * (env.demand.price(q) - c_bar) - k; };
  const double at_peak = net(q_peak);
  if (at_peak < 0.0)
    throw std::runtime_error("terminal_quantity: c_bar beyond the laissez-faire cutoff");
  if (at_peak == 0.0) return q_peak;
  return find_root(net, 0.0, q_peak, 1e-12);
}

double phi_price(const MarketEnvironment& env, double c, double c_bar) {
  const double f = env.cost.pdf(c);
  if (f <= 0.0) throw std::runtime_error("phi_price: density vanishes at c");
  const double q_term = terminal_quantity(env, c_bar);
  const double gamma = (env.demand.price(q_term) - c_bar) * env.cost.pdf(c_bar) -
                       (1.0 - env.alpha) * env.cost.cdf(c_bar);
  return c + ((1.0 - env.alpha) * env.cost.cdf(c) + gamma) / f;
}

double InnerSolution::q_at(double cost) const {
  if (cost < c_L) return monopoly_quantity(env, cost);
  if (cost < c_hat) return q_flat;
  if (cost <= c_bar) return q_taxed(env, gamma_const, cost);
  return 0.0;
}

double InnerSolution::pi_at(double cost) const {
  if (cost >= c_bar) return 0.0;
  // nearest sample node at or above cost, then a partial-cell correction
  const auto it = std::lower_bound(c.begin(), c.end(), cost);
  const std::size_t j = static_cast<std::size_t>(it - c.begin());
  const double base = pi[j];
  if (c[j] == cost) return base;
  return base + integrate([this](double x) { return q_at(x); }, cost, c[j], kPiCellTol);
}

Segment InnerSolution::segment_at(double cost) const {
  if (cost > c_bar) return Segment::Excluded;
  if (cost >= c_hat) return Segment::Taxed;
  if (cost >= c_L) return Segment::Bunch;
  return Segment::LaissezFaire;
}

InnerSolution inner_solve(const MarketEnvironment& env, double c_bar, int grid_n) {
  if (grid_n < 65) throw std::invalid_argument("inner_solve: grid_n must be >= 65");
  InnerSolution sol;
  sol.env = env;
  sol.c_bar = c_bar;
  sol.q_terminal = terminal_quantity(env, c_bar);
  sol.gamma_const = (env.demand.price(sol.q_terminal) - c_bar) * env.cost.pdf(c_bar) -
                    (1.0 - env.alpha) * env.cost.cdf(c_bar);
  const double k = env.fixed_cost;
  const double gamma = sol.gamma_const;
  const auto qt = [&](double c) { return q_taxed(env, gamma, c); };

  // Cumulative integral of the taxed branch from each node up to c_bar,
  // then the no-subsidy slack along the branch extended to the whole range.
  const int m = std::max(grid_n, 513);
  std::vector<double> x(m), tail(m), slack(m);
  for (int i = 0; i < m; ++i) x[i] = c_bar * i / (m - 1);
  tail[m - 1] = 0.0;
  for (int i = m - 2; i >= 0; --i)
    tail[i] = tail[i + 1] + integrate(qt, x[i], x[i + 1], kPiCellTol);
  for (int i = 0; i < m; ++i) {
    const double q = qt(x[i]);
    slack[i] = q > 0.0 ? q * (env.demand.price(q) - x[i]) - k - tail[i] : -k - tail[i];
  }

  // binding-to-slack switches, scanned from the top
  int crossings = 0;
  int bracket = -1;
  for (int i = m - 2; i >= 0; --i) {
    if (slack[i] <= 0.0 && slack[i + 1] > 0.0) {
      ++crossings;
      if (bracket < 0) bracket = i;
    }
  }

  if (bracket >= 0) {
    const auto g_of = [&](double cc) {
      const double q = qt(cc);
      const double pit = tail[bracket + 1] + integrate(qt, cc, x[bracket + 1], kPiCellTol);
      return (q > 0.0 ? q * (env.demand.price(q) - cc) : 0.0) - k - pit;
    };
    sol.c_hat = find_root(g_of, x[bracket], x[bracket + 1], 1e-13);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = bracket + 1; i + 1 < m; ++i) worst = std::min(worst, slack[i]);
    sol.min_slack = worst;
    sol.structure = (crossings == 1 && worst >= -kSlackTol) ? InnerStructure::SingleCrossing
                                                            : InnerStructure::MultipleCrossing;
  } else {
    sol.c_hat = 0.0;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < m; ++i) worst = std::min(worst, slack[i]);
    sol.min_slack = worst;
    sol.structure = worst >= -kSlackTol ? InnerStructure::NoBindingRegion
                                        : InnerStructure::Infeasible;
  }

  sol.q_flat = qt(sol.c_hat);
  const double mr = sol.q_flat > 0.0 ? env.demand.marginal_revenue(sol.q_flat) : 0.0;
  sol.c_L = std::clamp(mr, 0.0, sol.c_hat);

  // sample grid over [0, 1] with the segment breakpoints inserted
  std::vector<double> nodes(grid_n);
  for (int i = 0; i < grid_n; ++i) nodes[i] = static_cast<double>(i) / (grid_n - 1);
  for (double b : {sol.c_L, sol.c_hat, sol.c_bar}) nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              nodes.end());
  sol.c = nodes;
  const std::size_t n = nodes.size();
  sol.q.resize(n);
  sol.pi.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) sol.q[i] = sol.q_at(nodes[i]);
  for (std::size_t i = n - 1; i-- > 0;) {
    if (nodes[i] >= sol.c_bar) continue;
    const double hi = std::min(nodes[i + 1], sol.c_bar);
    sol.pi[i] = sol.pi[i + 1] +
                integrate([&](double cc) { return sol.q_at(cc); }, nodes[i], hi, kPiCellTol);
  }

  // expected weighted surplus, split at the segment breakpoints
  const auto integrand = [&](double cc) {
    const double q = sol.q_at(cc);
    return (env.demand.consumer_value(q) - cc * q - (1.0 - env.alpha) * sol.pi_at(cc)) *
           env.cost.pdf(cc);
  };
  double w = 0.0;
  const double segs[4] = {0.0, sol.c_L, sol.c_hat, sol.c_bar};
  for (int s = 0; s + 1 < 4; ++s)
    if (segs[s + 1] > segs[s]) w += integrate(integrand, segs[s], segs[s + 1], kWelfareTol);
  sol.welfare = w;
  return sol;
}

double RegulationPolicy::p_at(double c) const {
  const double cb = inner.c_bar;
  if (c > cb) return inner.env.demand.v_bar();  // no trade
  const double k = inner.env.fixed_cost;
  if (c == cb && k == 0.0) return cb;  // left limit of c + Pi/q
  const double q = inner.q_at(c);
  if (q <= 0.0) return inner.env.demand.v_bar();
  return c + (inner.pi_at(c) + k) / q;
}

namespace {

double lf_expected_welfare(const MarketEnvironment& env, double lf_cut) {
  // under laissez-faire the firm keeps exactly its market profit
  const auto integrand = [&](double c) {
    const double q = monopoly_quantity(env, c);
    const double pi = q > 0.0 ? (env.demand.price(q) - c) * q - env.fixed_cost : 0.0;
    return (env.demand.consumer_value(q) - c * q - (1.0 - env.alpha) * pi) * env.cost.pdf(c);
  };
  return integrate(integrand, 0.0, lf_cut, kWelfareTol);
}

RegulationPolicy assemble(const MarketEnvironment& env, InnerSolution inner, double lf_cut) {
  RegulationPolicy pol;
  pol.inner = std::move(inner);
  pol.p_hat = pol.inner.q_flat > 0.0 ? env.demand.price(pol.inner.q_flat) : env.demand.v_bar();
  pol.lf_welfare = lf_expected_welfare(env, lf_cut);

  const std::size_t n = pol.inner.c.size();
  pol.p.resize(n);
  pol.consumer_price.resize(n);
  pol.tax.resize(n);
  pol.segment.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = pol.inner.c[i];
    pol.segment[i] = pol.inner.segment_at(c);
    pol.p[i] = pol.p_at(c);
    const double q = pol.inner.q[i];
    pol.consumer_price[i] = q > 0.0 ? env.demand.price(q) : env.demand.v_bar();
    pol.tax[i] = std::max(pol.consumer_price[i] - pol.p[i], 0.0);
  }

  const auto rep = check_assumptions(env, 257);
  pol.structure_verified = rep.sufficiency_pass() &&
                           pol.inner.structure == InnerStructure::SingleCrossing;
  return pol;
}

}  // namespace

RegulationPolicy outer_solve(const MarketEnvironment& env, int grid_n, int cbar_grid_n,
                             Exec exec) {
  const double lf_cut = lf_cutoff(env);
  const double top = lf_cut * (1.0 - 1e-9);
  const int n = cbar_grid_n;

  std::vector<double> cand(n), welfare(n, -std::numeric_limits<double>::infinity());
  std::vector<char> usable(n, 0);
  for (int i = 0; i < n; ++i) cand[i] = top * (i + 1) / n;
  parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
    try {
      const InnerSolution s = inner_solve(env, cand[i], grid_n);
      if (s.structure != InnerStructure::Infeasible) {
        welfare[i] = s.welfare;
        usable[i] = 1;
      }
    } catch (const std::exception&) {
      // infeasible candidate; skipped
    }
  });

  int best = -1;
  for (int i = 0; i < n; ++i)
    if (usable[i] && (best < 0 || welfare[i] > welfare[best])) best = i;
  if (best < 0) throw std::runtime_error("outer_solve: every exclusion cutoff is infeasible");

  const double lo = best > 0 ? cand[best - 1] : cand[best] * 0.5;
  const double hi = best + 1 < n ? cand[best + 1] : top;
  const auto w_of = [&](double cb) {
    try {
      const InnerSolution s = inner_solve(env, cb, grid_n);
      return s.structure == InnerStructure::Infeasible ? -1e300 : s.welfare;
    } catch (const std::exception&) {
      return -1e300;
    }
  };
  const double refined = golden_max(w_of, lo, hi, 1e-8);

  InnerSolution pick = inner_solve(env, refined, grid_n);
  if (welfare[best] > pick.welfare) pick = inner_solve(env, cand[best], grid_n);
  // the degenerate cutoff c_bar -> 0 excludes everyone and is worth zero
  if (pick.welfare < 0.0)
    throw std::runtime_error("outer_solve: no truncation attains positive welfare");
  return assemble(env, std::move(pick), lf_cut);
}

double mbmc_residual(const MarketEnvironment& env, const RegulationPolicy& policy, double c) {
  const double eps = 1e-12;
  if (c < policy.c_hat() - eps || c > policy.c_bar() + eps)
    throw std::domain_error("mbmc_residual: c outside the taxed segment");
  return env.demand.price(policy.q_at(c)) - phi_price(env, c, policy.c_bar());
}

}  // namespace monoreg
