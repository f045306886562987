#pragma once

#include <functional>

namespace monoreg {

// Brent root bracketing: fn(lo) and fn(hi) must have opposite signs
// (a zero endpoint counts). Returns the abscissa to within x_tol.
double find_root(const std::function<double(double)>& fn, double lo, double hi,
                 double x_tol = 1e-12, int max_iter = 200);

// Golden-section maximizer of a unimodal function on [lo, hi].
double golden_max(const std::function<double(double)>& fn, double lo, double hi,
                  double x_tol = 1e-10);

// Adaptive Simpson quadrature with absolute error target.
double integrate(const std::function<double(double)>& fn, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

// Projects y onto the nonincreasing cone (pool-adjacent-violators, L2).
void project_nonincreasing(std::vector<double>& y);

}  // namespace monoreg
