#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "curvehyp/analytic.hpp"
#include "curvehyp/error.hpp"
#include "quadrature.hpp"

namespace curvehyp {

namespace {

const C I(0, 1);

bool near_integer(C z, double eps = 1e-12) {
  return std::abs(z.imag()) < eps && std::abs(z.real() - std::round(z.real())) < eps;
}

}  // namespace

C residue_integral(const CurveMatrix& A, const CVec& x, const RootSystem& R, int i, C b1, C b2,
                   const QuadConfig& cfg) {
  const int k = R.size();
  const C rho = R.roots[i];
  const double alpha = R.args[i];
  double r = std::abs(rho);
  for (int j = 0; j < k; ++j)
    if (j != i) r = std::min(r, std::abs(rho - R.roots[j]));
  r *= 0.45;
  // arg z near rho, continuous on the disk, inside the sector of the two adjacent rays
  auto logz = [&](C z) { return std::log(std::abs(z)) + I * (alpha + std::arg(z / rho)); };

  if (near_integer(b1)) {
    int p = static_cast<int>(std::round(b1.real()));
    auto g = [&](double phi) {
      C e = std::exp(I * phi);
      C z = rho + r * e;
      return std::pow(evaluate_f(A, x, z), p) * std::exp(-b2 * logz(z)) * (I * r * e / z);
    };
    auto q = quad::periodic_trapezoid(g, 0, 2 * M_PI, cfg.tol, 64, 12);
    if (!q.converged) fail(ErrorKind::NonConvergence, "residue", "loop quadrature did not converge");
    return q.value;
  }

  if (!(-b2.real() > 0)) fail(ErrorKind::Domain, "outside-domain", "keyhole residue needs Re(-b2) > 0");
  // infinity-anchored branch: the cut of Log(1 - rho_i/z) is the segment [0, rho_i], so the
  // difference of the two adjacent rays is the keyhole around that segment, taken from the
  // side of the lower ray (arg -> -pi) and continued counterclockwise
  for (int j = 0; j < k; ++j) {
    if (j == i) continue;
    C rj = R.roots[j];
    double t = std::clamp((std::conj(rj) * rho).real() / std::norm(rj), 0.0, 1.0);
    r = std::min(r, 0.45 * std::abs(rho - t * rj));
  }
  const double kk = double(A.k());
  const C logxn = std::log(x.back());
  const double plen = std::abs(rho) - r;
  const C dir = std::exp(I * alpha);
  auto others = [&](C z) {
    C L = 0;
    for (int j = 0; j < k; ++j)
      if (j != i) L += std::log(1.0 - R.roots[j] / z);
    return L;
  };
  auto gseg = [&](double u) {
    double tau = std::exp(u);
    double t = plen / (1 + 1 / tau);
    C lz = std::log(t) + I * alpha;
    C L = logxn + kk * lz + others(dir * t) + std::log(std::abs(1.0 - std::abs(rho) / t)) - I * M_PI;
    return std::exp(b1 * L - b2 * lz) / (1 + tau);
  };
  auto qs = quad::double_exponential(gseg, 0, -b2.real(), 1.0, cfg.tol, cfg.max_halvings);
  const double phi0 = alpha + M_PI;
  auto gcirc = [&](double phi) {
    C e = std::exp(I * phi);
    C z = rho + r * e;
    C lz = logz(z);
    C Li = std::log(r / std::abs(z)) + I * (phi - lz.imag() - 2 * M_PI);
    C L = logxn + kk * lz + others(z) + Li;
    return std::exp(b1 * L - b2 * lz) * (I * r * e / z);
  };
  auto qc = quad::gauss_legendre(gcirc, phi0, phi0 + 2 * M_PI, cfg.tol, 12);
  if (!qs.converged || !qc.converged) fail(ErrorKind::NonConvergence, "residue", "keyhole quadrature did not converge");
  return (1.0 - std::exp(2 * M_PI * I * b1)) * qs.value + qc.value;
}

C residue_at_zero(const CurveMatrix& A, const CVec& x, C b1, int64_t b2, int nodes) {
  RootSystem R = roots_and_components(A, x);
  double r = INFINITY;
  for (const auto& rj : R.roots) r = std::min(r, std::abs(rj));
  r *= 0.5;
  const C logx1 = std::log(x.front());
  C s = 0;
  for (int j = 0; j < nodes; ++j) {
    C z = r * std::exp(I * (2 * M_PI * j / nodes));
    C L = logx1;
    for (const auto& rj : R.roots) L += std::log(1.0 - z / rj);
    s += std::exp(b1 * L) * std::pow(z, -static_cast<int>(b2));
  }
  return s * (2 * M_PI / nodes) * I;
}

C residue_at_infinity(const CurveMatrix& A, const CVec& x, C b1, C b2, int nodes) {
  C m = double(A.k()) * b1 - b2;
  if (!near_integer(m, 1e-10)) fail(ErrorKind::Domain, "branch", "residue at infinity needs k b1 - b2 integer");
  int M = static_cast<int>(std::round(m.real()));
  RootSystem R = roots_and_components(A, x);
  double r = 0;
  for (const auto& rj : R.roots) r = std::max(r, std::abs(rj));
  r *= 2;
  const C logxn = std::log(x.back());
  C s = 0;
  for (int j = 0; j < nodes; ++j) {
    C z = r * std::exp(I * (2 * M_PI * j / nodes));
    C L = logxn;
    for (const auto& rj : R.roots) L += std::log(1.0 - rj / z);
    s += std::exp(b1 * L) * std::pow(z, M);
  }
  return -s * (2 * M_PI / nodes) * I;  // clockwise
}

MatchReport polar_line_match_check(const CurveMatrix& A, const FiniteSeries& family, const std::vector<C>& lambdas,
                                   const std::vector<CVec>& xs, const QuadConfig& cfg) {
  if (!is_integer(family.level)) fail(ErrorKind::Validation, "level", "polar level must be an integer");
  const int64_t N = to_int64(family.level);
  MatchReport rep;
  for (const auto& x : xs) {
    RootSystem R = roots_and_components(A, x);
    for (const auto& lam : lambdas) {
      C expected = polar_kappa(N, lam) * evaluate_series(family, x, lam);
      C first = 0;
      for (int i = 0; i < R.size(); ++i) {
        auto e = regularized_ratio(A, x, R.theta(i), family.facet, N, lam, FacetOrder::Facet0First, cfg);
        rep.converged = rep.converged && e.converged;
        rep.values.push_back(e.value);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(e.value - expected) / std::abs(expected));
        if (i == 0) first = e.value;
        else rep.component_spread = std::max(rep.component_spread, std::abs(e.value - first) / std::abs(first));
      }
    }
  }
  return rep;
}

MatchReport polar_line_match_check(const CurveMatrix& A, Facet f, int64_t N, const std::vector<C>& lambdas,
                                   const std::vector<CVec>& xs, const QuadConfig& cfg) {
  return polar_line_match_check(A, polar_line_family(A, f, N), lambdas, xs, cfg);
}

CVec sample_in_V(const CurveMatrix& A, uint64_t seed, double ratio) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> mag(0.5, 2.0), ang(-M_PI, M_PI), small(0.2, 1.0);
  const int n = A.n();
  CVec x(n);
  x[0] = std::polar(mag(gen), ang(gen));
  x[n - 1] = std::polar(mag(gen), ang(gen));
  double base = std::min(std::abs(x[0]), std::abs(x[n - 1]));
  for (int i = 1; i + 1 < n; ++i) x[i] = std::polar(ratio * base * small(gen), ang(gen));
  return x;
}

ProbeReport em_independence_probe(const CurveMatrix& A, C b1, C b2, const CVec& x, uint64_t seed,
                                  const QuadConfig& cfg) {
  const int k = static_cast<int>(A.k());
  RootSystem R0 = roots_and_components(A, x);
  std::vector<double> thetas;
  for (int i = 0; i < k; ++i) thetas.push_back(R0.theta(i));

  // polar parameters use the regularized ratio
  std::optional<std::pair<Facet, int64_t>> polar;
  if (near_integer(b2) && polar_level_semigroup(A, Facet::Zero).contains(std::llround(b2.real())))
    polar = std::make_pair(Facet::Zero, static_cast<int64_t>(std::llround(b2.real())));
  C m = double(k) * b1 - b2;
  if (!polar && near_integer(m) && polar_level_semigroup(A, Facet::K).contains(std::llround(m.real())))
    polar = std::make_pair(Facet::K, static_cast<int64_t>(std::llround(m.real())));

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(-1, 1);
  auto theta_fits = [&](const RootSystem& R) {
    for (int i = 0; i < k; ++i)
      if (!(R.arcs[i].first < thetas[i] && thetas[i] < R.arcs[i].second)) return false;
    return true;
  };
  Eigen::MatrixXcd M(k, k);
  ProbeReport rep;
  int row = 0;
  for (int attempt = 0; row < k && attempt < 1000; ++attempt) {
    CVec xs = x;
    double base = std::min(std::abs(x.front()), std::abs(x.back()));
    if (row > 0)
      for (int i = 1; i + 1 < A.n(); ++i) xs[i] = std::polar(0.1 * base * (0.65 + 0.35 * unit(gen)), M_PI * unit(gen));
    if (!in_V(A, xs, 0.1) || !theta_fits(roots_and_components(A, xs))) continue;
    double scale = 0;
    for (int i = 0; i < k; ++i) {
      EMEvaluation e = polar ? regularized_ratio(A, xs, thetas[i], polar->first, polar->second, b1,
                                                 FacetOrder::Facet0First, cfg)
                             : extended_euler_mellin(A, xs, thetas[i], b1, b2, FacetOrder::Facet0First, cfg);
      rep.converged = rep.converged && e.converged;
      M(row, i) = e.value;
      scale = std::max(scale, std::abs(e.value));
    }
    for (int i = 0; i < k; ++i) M(row, i) /= scale;
    ++row;
  }
  if (row < k) fail(ErrorKind::NonConvergence, "probe", "could not place the samples inside the components");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  auto sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i) rep.singular_values.push_back(sv(i));
  rep.min_singular = sv(sv.size() - 1) / sv(0);
  return rep;
}

}  // namespace curvehyp
