#include "monoreg/environment.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace monoreg {

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_double(std::uint64_t h, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  return hash_mix(h, bits);
}

std::uint64_t hash_string(std::uint64_t h, const std::string& s) {
  for (char ch : s) h = hash_mix(h, static_cast<std::uint64_t>(ch));
  return h;
}

}  // namespace

std::uint64_t MarketEnvironment::fingerprint() const {
  std::uint64_t h = 0x6d6f6e6f72656731ull;
  h = hash_string(h, demand.family());
  for (double p : demand.params()) h = hash_double(h, p);
  h = hash_string(h, cost.family());
  for (double p : cost.params()) h = hash_double(h, p);
  h = hash_double(h, alpha);
  h = hash_double(h, fixed_cost);
  return h;
}

const AssumptionCheck& AssumptionReport::get(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("AssumptionReport: no check named " + name);
}

bool AssumptionReport::core_pass() const {
  return get("revenue_concavity").pass && get("demand_boundaries").pass &&
         get("max_revenue_covers_k").pass;
}

bool AssumptionReport::sufficiency_pass() const {
  return get("density_nonincreasing").pass && get("density_log_concave").pass &&
         get("inverse_demand_log_concave").pass;
}

AssumptionReport check_assumptions(const MarketEnvironment& env, int grid_n) {
  if (grid_n < 16) throw std::invalid_argument("check_assumptions: grid_n must be >= 16");
  const auto& d = env.demand;
  const int n = grid_n;
  AssumptionReport rep;
  rep.grid_n = n;

  // revenue concavity on the quantity grid
  {
    double worst = -std::numeric_limits<double>::infinity();
    double at = 0.0;
    const double h = d.q_max() / (n + 1);
    for (int i = 1; i + 1 <= n; ++i) {
      const double q = i * h;
      const double r0 = (q - h) * d.price(q - h);
      const double r1 = q * d.price(q);
      const double r2 = (q + h) * d.price(q + h);
      const double dd = r2 - 2.0 * r1 + r0;
      if (dd > worst) { worst = dd; at = q; }
    }
    rep.checks.push_back({"revenue_concavity", worst < 0.0, worst,
                          "worst second difference of qP(q) at q=" + std::to_string(at)});
  }

  // boundary limits P(0) = v_bar, P(q_max) = 0
  {
    const double e0 = std::abs(d.price(0.0) - d.v_bar());
    const double e1 = std::abs(d.price(d.q_max()));
    const double worst = std::max(e0, e1);
    rep.checks.push_back({"demand_boundaries", worst <= 1e-9, worst, ""});
  }

  // a quantity with revenue above the fixed cost exists
  {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
      const double q = d.q_max() * i / n;
      best = std::max(best, q * d.price(q));
    }
    rep.checks.push_back({"max_revenue_covers_k", best - env.fixed_cost > 0.0,
                          best - env.fixed_cost, ""});
  }

  // density nonincreasing
  {
    double worst = -std::numeric_limits<double>::infinity();
    double at = 0.0;
    double prev = env.cost.pdf(0.0);
    for (int i = 1; i < n; ++i) {
      const double c = static_cast<double>(i) / (n - 1);
      const double f = env.cost.pdf(c);
      if (f - prev > worst) { worst = f - prev; at = c; }
      prev = f;
    }
    rep.checks.push_back({"density_nonincreasing", worst <= 1e-12, worst,
                          "largest increase of f at c=" + std::to_string(at)});
  }

  // log-concavity of the density where f > 0
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 1; i + 1 < n; ++i) {
      const double h = 1.0 / (n - 1);
      const double c = i * h;
      const double f0 = env.cost.pdf(c - h), f1 = env.cost.pdf(c), f2 = env.cost.pdf(c + h);
      if (f0 <= 0.0 || f1 <= 0.0 || f2 <= 0.0) continue;
      worst = std::max(worst, std::log(f2) - 2.0 * std::log(f1) + std::log(f0));
    }
    rep.checks.push_back({"density_log_concave", worst <= 1e-12, worst, ""});
  }

  // strict log-concavity of the demand function P^{-1} on an interior price grid
  {
    double worst = -std::numeric_limits<double>::infinity();
    const double h = d.v_bar() / (n + 1);
    for (int i = 1; i + 1 <= n; ++i) {
      const double p = i * h;
      const double q0 = d.quantity(p - h), q1 = d.quantity(p), q2 = d.quantity(p + h);
      if (q0 <= 0.0 || q1 <= 0.0 || q2 <= 0.0) continue;
      worst = std::max(worst, std::log(q2) - 2.0 * std::log(q1) + std::log(q0));
    }
    rep.checks.push_back({"inverse_demand_log_concave", worst < 0.0, worst, ""});
  }

  return rep;
}

}  // namespace monoreg
