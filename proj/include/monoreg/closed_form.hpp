#pragma once

#include <vector>

namespace monoreg {

// Exact solution of the linear-demand / uniform-cost / zero-fixed-cost case,
// derived independently of the numeric solver. The truncated mechanism for a
// given exclusion cutoff is piecewise polynomial, so expected welfare is a
// cubic in the cutoff; it is integrated segment-by-segment with Simpson's
// rule (exact for cubics) and maximized through its stationary points.
struct ClosedFormLinearUniform {
  double A = 1.0, B = 1.0, alpha = 1.0;
  double c_bar_star = 0.0;
  double c_hat = 0.0;
  double c_L = 0.0;  // always 0 in the regime this closed form covers
  double p_hat = 0.0;
  double q_flat = 0.0;
  double welfare = 0.0;
  bool c_hat_clamped = false;  // cutoff too small for an interior bunching boundary

  double c_hat_of(double c_bar) const;
  double q_flat_of(double c_bar) const;
  double welfare_of(double c_bar) const;

  double q_star(double c) const;
  double p_star(double c) const;
  double consumer_price(double c) const;
  double tau(double p) const;
};

// Requires A <= 1, A <= 2B (uniform cost on [0, 1], k = 0).
ClosedFormLinearUniform closed_form_policy(double A, double B, double alpha);

}  // namespace monoreg
