#pragma once

#include <vector>

#include "monoreg/environment.hpp"
#include "monoreg/laissez_faire.hpp"
#include "monoreg/parallel_for.hpp"

namespace monoreg {

// Quantity assigned to the marginal (highest served) cost type: the root of
// q [P(q) - c_bar] = k on the increasing side of gross profit, in (0, q_hat].
// k = 0 gives 0. Throws when no quantity covers k at c_bar.
double terminal_quantity(const MarketEnvironment& env, double c_bar);

// Virtual consumer price on the taxed branch:
//   phi(c) = c + [(1-alpha) F(c) + gamma] / f(c),
// where gamma = [P(q(c_bar)) - c_bar] f(c_bar) - (1-alpha) F(c_bar).
// Throws if f(c) = 0.
double phi_price(const MarketEnvironment& env, double c, double c_bar);

// How the binding pattern of the no-subsidy constraint was resolved.
enum class InnerStructure {
  SingleCrossing,    // one binding-to-slack switch, slack clean above it
  MultipleCrossing,  // took the largest root; slack dips somewhere above
  NoBindingRegion,   // constraint slack everywhere; c_hat clamped to 0
  Infeasible,        // construction violates no-subsidy with no crossing
};

enum class Segment : int { LaissezFaire = 0, Bunch = 1, Taxed = 2, Excluded = 3 };

// Optimal truncated mechanism for a fixed exclusion cutoff c_bar.
struct InnerSolution {
  MarketEnvironment env;
  double c_bar = 0.0, c_hat = 0.0, c_L = 0.0;
  double q_terminal = 0.0, gamma_const = 0.0, q_flat = 0.0;
  double welfare = 0.0;
  InnerStructure structure = InnerStructure::Infeasible;
  double min_slack = 0.0;  // smallest no-subsidy slack above c_hat

  std::vector<double> c, q, pi;  // samples on [0, 1]; breakpoints included

  double q_at(double cost) const;
  double pi_at(double cost) const;
  Segment segment_at(double cost) const;
};

InnerSolution inner_solve(const MarketEnvironment& env, double c_bar, int grid_n = 1025);

// Solved four-segment policy: laissez-faire below c_L, bunching at the
// benchmark price on [c_L, c_hat), taxed prices on [c_hat, c_bar], exclusion
// above. Firm price p(c) = c + (Pi(c) + k) / q(c) on the active range.
struct RegulationPolicy {
  InnerSolution inner;
  double p_hat = 0.0;
  double lf_welfare = 0.0;
  bool structure_verified = false;  // sufficiency hypotheses + clean single crossing

  std::vector<double> p, consumer_price, tax;  // aligned with inner.c
  std::vector<Segment> segment;

  double c_L() const { return inner.c_L; }
  double c_hat() const { return inner.c_hat; }
  double c_bar() const { return inner.c_bar; }
  double welfare() const { return inner.welfare; }
  double q_at(double c) const { return inner.q_at(c); }
  double pi_at(double c) const { return inner.pi_at(c); }
  double p_at(double c) const;
};

RegulationPolicy outer_solve(const MarketEnvironment& env, int grid_n = 1025,
                             int cbar_grid_n = 129, Exec exec = Exec::Parallel);

// P(q*(c)) - phi(c; c_bar) on the taxed segment; zero up to solve tolerance.
double mbmc_residual(const MarketEnvironment& env, const RegulationPolicy& policy, double c);

}  // namespace monoreg
