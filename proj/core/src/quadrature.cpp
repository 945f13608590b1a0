#include "swlw/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "swlw/errors.hpp"

namespace swlw {

double jacobi_moment0(double alpha, double beta) {
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                  std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

// Golub–Welsch on the Jacobi recurrence.
QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw ValidationError("quadrature needs at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw ValidationError("Jacobi exponents must exceed -1");
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  const double ab = alpha + beta;
  for (int k = 0; k < n; ++k) {
    const double d = 2.0 * k + ab;
    if (k == 0)
      diag(k) = (beta - alpha) / (ab + 2.0);
    else
      diag(k) = (beta * beta - alpha * alpha) / (d * (d + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double d = 2.0 * k + ab;
    double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    double den = d * d * (d + 1.0) * (d - 1.0);
    if (k == 1 && std::abs(ab + 1.0) < 1e-14) {
      // d − 1 = 0 limit handled by the closed form for k = 1.
      num = 4.0 * (1.0 + alpha) * (1.0 + beta);
      den = (2.0 + ab) * (2.0 + ab) * (3.0 + ab);
    }
    sub(k - 1) = std::sqrt(num / den);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericalError("Gauss-Jacobi eigensolve failed");
  const double mu0 = jacobi_moment0(alpha, beta);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  rule.exact_degree = 2 * n - 1;
  return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace swlw
