#pragma once

#include <cstddef>
#include <vector>

namespace swlw {

// Monotone piecewise cubic Hermite interpolant (Fritsch–Carlson slopes).
class Pchip {
public:
  Pchip() = default;
  Pchip(std::vector<double> x, std::vector<double> y);

  double operator()(double xq) const;
  double derivative(double xq) const;
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

private:
  std::size_t interval(double xq) const;
  std::vector<double> x_, y_, d_;
};

// Local Lagrange interpolation of order `points` on the uniform grid x_i = x0 + i·dx.
double lagrange_uniform(const std::vector<double>& f, double x0, double dx, double xq,
                        int points = 6);

}  // namespace swlw
