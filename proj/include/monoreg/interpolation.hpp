#pragma once

#include <vector>

namespace monoreg {

// Monotone cubic Hermite interpolant (Fritsch-Carlson slope limiting).
// Preserves monotonicity of the data and has a continuous first derivative.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  // Inverse for strictly monotone data; root solve within the knot cell.
  double inverse(double y) const;

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  bool empty() const { return x_.empty(); }

 private:
  std::size_t cell(double x) const;
  std::vector<double> x_, y_, slope_;
  bool increasing_ = true;
};

}  // namespace monoreg
