#include "monoreg/intervention_gate.hpp"

#include <stdexcept>

namespace monoreg {

GateReport gate(const MarketEnvironment& env, const LaissezFaireSchedule& lf,
                int grid_n, double tol, Exec exec) {
  if (lf.env_fingerprint != env.fingerprint())
    throw std::invalid_argument("gate: schedule was computed for a different environment");
  if (tol < 0.0) throw std::invalid_argument("gate: tol must be >= 0");

  GateReport rep;
  rep.tolerance = tol;
  const int n = grid_n;
  rep.c.resize(n);
  rep.margin.resize(n);
  parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
    const double c = lf.cutoff * static_cast<double>(i) / (n - 1);
    const double q = monopoly_quantity(env, c);
    const double markup = q > 0.0 ? env.demand.price(q) - c : 0.0;
    rep.c[i] = c;
    rep.margin[i] = markup * env.cost.pdf(c) - (1.0 - env.alpha) * env.cost.cdf(c);
  });

  rep.margin_at_zero = rep.margin.front();
  double worst = 0.0, at = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double inc = rep.margin[i + 1] - rep.margin[i];
    if (inc < worst) { worst = inc; at = rep.c[i]; }
  }
  rep.worst_violation = worst;
  rep.worst_violation_at = at;
  rep.lf_optimal = worst >= -tol && rep.margin_at_zero >= -tol;
  return rep;
}

std::vector<std::pair<double, double>> markup_curve(const MarketEnvironment& env,
                                                    const LaissezFaireSchedule& lf,
                                                    int grid_n) {
  if (lf.env_fingerprint != env.fingerprint())
    throw std::invalid_argument("markup_curve: schedule was computed for a different environment");
  std::vector<std::pair<double, double>> out(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    const double c = static_cast<double>(i) / (grid_n - 1);
    double markup = 0.0;
    if (c <= lf.cutoff) {
      const double q = monopoly_quantity(env, c);
      markup = q > 0.0 ? env.demand.price(q) - c : 0.0;
    }
    out[i] = {c, markup};
  }
  return out;
}

}  // namespace monoreg
