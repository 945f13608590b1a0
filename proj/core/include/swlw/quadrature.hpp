#pragma once

#include <vector>

namespace swlw {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;  // integrates weight·polynomial exactly up to this degree
};

// Gauss–Jacobi rule for ∫_{-1}^{1} f(s) (1−s)^alpha (1+s)^beta ds, alpha, beta > −1.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);
QuadratureRule gauss_legendre(int n);

// ∫_{-1}^{1} (1−s)^alpha (1+s)^beta ds.
double jacobi_moment0(double alpha, double beta);

}  // namespace swlw
