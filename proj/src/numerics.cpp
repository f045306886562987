#include "monoreg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace monoreg {

double find_root(const std::function<double(double)>& fn, double lo, double hi,
                 double x_tol, int max_iter) {
  double a = lo, b = hi;
  double fa = fn(a), fb = fn(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw std::invalid_argument("find_root: endpoints do not bracket a root");

  // Brent's method: inverse quadratic / secant with bisection fallback.
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * x_tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = fn(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

double golden_max(const std::function<double(double)>& fn, double lo, double hi,
                  double x_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2; f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1; f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = fn(x1);
    }
  }
  return 0.5 * (a + b);
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return (fa + 4.0 * fm + fb) * h / 6.0;
}

double simpson_adapt(const std::function<double(double)>& fn, double a, double m,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = fn(lm), frm = fn(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  return simpson_adapt(fn, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_adapt(fn, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& fn, double a, double b,
                 double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = fn(a), fm = fn(m), fb = fn(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return simpson_adapt(fn, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

void project_nonincreasing(std::vector<double>& y) {
  const std::size_t n = y.size();
  if (n < 2) return;
  // PAV on the negated sequence (isotonic nondecreasing).
  std::vector<double> val(n), wt(n);
  std::vector<std::size_t> len(n);
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = -y[i], w = 1.0;
    std::size_t l = 1;
    while (m > 0 && val[m - 1] > v) {
      --m;
      v = (v * w + val[m] * wt[m]) / (w + wt[m]);
      w += wt[m];
      l += len[m];
    }
    val[m] = v; wt[m] = w; len[m] = l;
    ++m;
  }
  std::size_t j = 0;
  for (std::size_t blk = 0; blk < m; ++blk)
    for (std::size_t r = 0; r < len[blk]; ++r) y[j++] = -val[blk];
}

}  // namespace monoreg
