#pragma once

#include <complex>
#include <functional>

namespace curvehyp::quad {

using C = std::complex<double>;

struct Result {
  C value;
  double error = 0;
  bool converged = false;
  int evaluations = 0;
};

// integral over the real line of g(u), which decays like exp(-right*u) as u -> +inf and
// exp(left*u) as u -> -inf; substitution u = center + sinh(s), trapezoid with step halving
Result double_exponential(const std::function<C(double)>& g, double center, double left, double right, double tol,
                          int max_halvings);

// integral over [a, b] with composite Gauss-Legendre panels, doubling until stable
Result gauss_legendre(const std::function<C(double)>& g, double a, double b, double tol, int max_doublings = 10);

// integral over a full period of a periodic g with n equispaced nodes, doubling until stable
Result periodic_trapezoid(const std::function<C(double)>& g, double a, double period, double tol, int n0 = 64,
                          int max_doublings = 10);

}  // namespace curvehyp::quad
