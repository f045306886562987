#include "monoreg/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monoreg/numerics.hpp"

namespace monoreg {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw std::invalid_argument("MonotoneCubic: need >= 2 matching knots");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("MonotoneCubic: x must be strictly increasing");

  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

  slope_.assign(n, 0.0);
  slope_[0] = d[0];
  slope_[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slope_[i] = 0.0;
    } else {
      // weighted harmonic mean keeps the interpolant monotone
      const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
      const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
      slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  // clamp endpoint slopes (Fritsch-Carlson condition at the boundary cells)
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      slope_[i] = slope_[i + 1] = 0.0;
    } else {
      const double a = slope_[i] / d[i], b = slope_[i + 1] / d[i];
      if (a > 3.0) slope_[i] = 3.0 * d[i];
      if (b > 3.0) slope_[i + 1] = 3.0 * d[i];
    }
  }
  increasing_ = y_.back() >= y_.front();
}

std::size_t MonotoneCubic::cell(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t i = cell(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = cell(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6 * t2 - 6 * t) / h, dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = (-6 * t2 + 6 * t) / h, dh11 = 3 * t2 - 2 * t;
  return dh00 * y_[i] + dh10 * slope_[i] + dh01 * y_[i + 1] + dh11 * slope_[i + 1];
}

double MonotoneCubic::inverse(double y) const {
  const double ylo = increasing_ ? y_.front() : y_.back();
  const double yhi = increasing_ ? y_.back() : y_.front();
  if (y <= ylo) return increasing_ ? x_.front() : x_.back();
  if (y >= yhi) return increasing_ ? x_.back() : x_.front();
  // locate the knot cell containing y, then solve within it
  std::size_t lo = 0, hi = x_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const bool left = increasing_ ? (y_[mid] > y) : (y_[mid] < y);
    (left ? hi : lo) = mid;
  }
  if (y_[lo] == y) return x_[lo];
  if (y_[hi] == y) return x_[hi];
  return find_root([&](double x) { return (*this)(x) - y; }, x_[lo], x_[hi], 1e-14);
}

}  // namespace monoreg
