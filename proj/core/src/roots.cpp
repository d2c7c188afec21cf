#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "curvehyp/analytic.hpp"
#include "curvehyp/error.hpp"

namespace curvehyp {

C evaluate_f(const CurveMatrix& A, const CVec& x, C z) {
  C s = 0;
  for (int i = 0; i < A.n(); ++i) s += x[i] * std::pow(z, static_cast<int>(A.exponent(i)));
  return s;
}

bool in_V(const CurveMatrix& A, const CVec& x, double ratio) {
  double mid = 0;
  for (int i = 1; i + 1 < A.n(); ++i) mid = std::max(mid, std::abs(x[i]));
  return mid <= ratio * std::min(std::abs(x.front()), std::abs(x.back()));
}

double RootSystem::theta(int i) const {
  if (i == size()) return theta(0) + 2 * M_PI;
  return 0.5 * (arcs[i].first + arcs[i].second);
}

RootSystem roots_and_components(const CurveMatrix& A, const CVec& x) {
  const int n = A.n();
  const int k = static_cast<int>(A.k());
  if (static_cast<int>(x.size()) != n) fail(ErrorKind::Validation, "length", "x has the wrong length");
  if (x.front() == 0.0 || x.back() == 0.0)
    fail(ErrorKind::Validation, "boundary-coefficient", "x_1 and x_n must be nonzero");
  CVec c(k + 1, 0.0);
  for (int i = 0; i < n; ++i) c[A.exponent(i)] += x[i];
  RootSystem R;
  if (k == 1) {
    R.roots = {-c[0] / c[1]};
  } else {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(k, k);
    for (int i = 1; i < k; ++i) M(i, i - 1) = 1.0;
    for (int j = 0; j < k; ++j) M(j, k - 1) = -c[j] / c[k];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    if (es.info() != Eigen::Success) fail(ErrorKind::NonConvergence, "roots", "eigenvalue solver failed");
    for (int j = 0; j < k; ++j) R.roots.push_back(es.eigenvalues()(j));
  }
  auto deriv = [&](C z) {
    C s = 0;
    for (int i = 1; i < n; ++i)
      s += double(A.exponent(i)) * x[i] * std::pow(z, static_cast<int>(A.exponent(i) - 1));
    return s;
  };
  for (auto& r : R.roots) {
    for (int it = 0; it < 4; ++it) {
      C d = deriv(r);
      if (std::abs(d) == 0) break;
      C step = evaluate_f(A, x, r) / d;
      r -= step;
      if (std::abs(step) <= 1e-17 * std::abs(r)) break;
    }
  }
  for (const auto& r : R.roots) {
    double scale = 0;
    for (int i = 0; i < n; ++i) scale += std::abs(x[i]) * std::pow(std::abs(r), double(A.exponent(i)));
    R.residual = std::max(R.residual, std::abs(evaluate_f(A, x, r)) / scale);
  }
  std::sort(R.roots.begin(), R.roots.end(), [](C a, C b) { return std::arg(a) < std::arg(b); });
  double rmax = 0;
  for (const auto& r : R.roots) {
    R.args.push_back(std::arg(r));
    rmax = std::max(rmax, std::abs(r));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs(R.roots[i] - R.roots[j]) < 1e-8 * rmax) R.singular = true;
  if (R.residual > 1e-12 && !R.singular)
    fail(ErrorKind::NonConvergence, "roots", "root residual " + std::to_string(R.residual) + " above 1e-12");
  for (int i = 0; i < k; ++i) {
    double lo = i == 0 ? R.args[k - 1] - 2 * M_PI : R.args[i - 1];
    R.arcs.emplace_back(lo, R.args[i]);
  }
  return R;
}

}  // namespace curvehyp
