#include <cmath>
#include <map>

#include "curvehyp/analytic.hpp"
#include "curvehyp/error.hpp"
#include "quadrature.hpp"

namespace curvehyp {

std::string anchor_name(Anchor a) { return a == Anchor::Zero ? "zero" : "infinity"; }

std::string facet_order_name(FacetOrder o) { return o == FacetOrder::Facet0First ? "facet-0-first" : "facet-k-first"; }

bool in_domain(const CurveMatrix& A, C b1, C b2, double margin) {
  return -b2.real() > margin && (b2 - double(A.k()) * b1).real() > margin;
}

namespace {

const C I(0, 1);

// continuous log f along z = e^{i theta} e^u
struct RayLog {
  Anchor anchor;
  double theta;
  double k;
  C base;   // Log x_1 or Log x_n
  CVec c;   // e^{i theta}/rho_j (zero anchor) or rho_j e^{-i theta} (infinity anchor)
  CVec logneg;  // Log(-c_j)

  RayLog(const CurveMatrix& A, const CVec& x, const RootSystem& R, double th, Anchor a)
      : anchor(a), theta(th), k(double(A.k())) {
    base = std::log(a == Anchor::Zero ? x.front() : x.back());
    for (const auto& r : R.roots) {
      C cj = a == Anchor::Zero ? std::exp(I * th) / r : r * std::exp(-I * th);
      c.push_back(cj);
      logneg.push_back(std::log(-cj));
    }
  }

  C operator()(double u) const {
    C L = base;
    if (anchor == Anchor::Zero) {
      // Log(1 - e^u c), rewritten for large u where 1 - e^u c ~ -e^u c
      for (size_t j = 0; j < c.size(); ++j) {
        if (u > 30) L += u + logneg[j] + std::log(1.0 - std::exp(-u) / c[j]);
        else L += std::log(1.0 - std::exp(u) * c[j]);
      }
    } else {
      L += k * (u + I * theta);
      for (size_t j = 0; j < c.size(); ++j) {
        if (u < -30) L += -u + logneg[j] + std::log(1.0 - std::exp(u) / c[j]);
        else L += std::log(1.0 - c[j] * std::exp(-u));
      }
    }
    return L;
  }
};

double log_center(const RootSystem& R) {
  double s = 0;
  for (const auto& r : R.roots) s += std::log(std::abs(r));
  return s / R.size();
}

EMEvaluation direct_with_roots(const CurveMatrix& A, const CVec& x, const RootSystem& R, double theta, C b1, C b2,
                               const QuadConfig& cfg, Anchor anchor) {
  if (!in_domain(A, b1, b2))
    fail(ErrorKind::Domain, "outside-domain", "parameter outside the convergence domain; use the extension");
  RayLog L(A, x, R, theta, anchor);
  auto g = [&](double u) { return std::exp(b1 * L(u) - b2 * (u + I * theta)); };
  double left = -b2.real(), right = (b2 - double(A.k()) * b1).real();
  auto q = quad::double_exponential(g, log_center(R), left, right, cfg.tol, cfg.max_halvings);
  EMEvaluation e;
  e.value = q.value;
  e.error = q.error;
  e.converged = q.converged;
  e.theta = theta;
  e.b1 = b1;
  e.b2 = b2;
  e.anchor = anchor;
  e.method = "direct-ray";
  e.quadratures = 1;
  return e;
}

// extension formula at beta' = beta - (c, s) for the given order
Facet pick_formula(const CurveMatrix& A, C b1, C b2, FacetOrder order, double margin) {
  bool ok0 = -b2.real() > margin;
  bool okk = (b2 - double(A.k()) * b1).real() > margin;
  if (order == FacetOrder::Facet0First) return ok0 ? Facet::K : Facet::Zero;
  return okk ? Facet::Zero : Facet::K;
}

// terms (i, weight) of the formula: M(beta) = coef * sum_i weight_i x_i M(beta - a_i)
std::vector<std::pair<int, double>> formula_terms(const CurveMatrix& A, Facet f) {
  std::vector<std::pair<int, double>> t;
  for (int i = 0; i < A.n(); ++i) {
    double w = f == Facet::Zero ? double(A.exponent(i)) : double(A.k() - A.exponent(i));
    if (w != 0) t.emplace_back(i, w);
  }
  return t;
}

C formula_coef(const CurveMatrix& A, Facet f, C b1, C b2) {
  C den = f == Facet::Zero ? b2 : double(A.k()) * b1 - b2;
  if (std::abs(den) < 1e-12) fail(ErrorKind::Domain, "polar", "extension formula hits a polar line");
  return b1 / den;
}

class Extender {
 public:
  Extender(const CurveMatrix& A, const CVec& x, double theta, C b1, C b2, FacetOrder order, const QuadConfig& cfg,
           Anchor anchor)
      : A_(A), x_(x), R_(roots_and_components(A, x)), theta_(theta), b1_(b1), b2_(b2), order_(order), cfg_(cfg),
        anchor_(anchor) {}

  struct Val {
    C v;
    double err = 0;
    bool ok = true;
  };

  Val plain(int64_t c, int64_t s) {
    auto key = std::make_pair(c, s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    C b1 = b1_ - double(c), b2 = b2_ - double(s);
    Val out;
    if (in_domain(A_, b1, b2, cfg_.margin)) {
      auto e = direct_with_roots(A_, x_, R_, theta_, b1, b2, cfg_, anchor_);
      quadratures_++;
      out = {e.value, e.error, e.converged};
    } else {
      Facet f = pick_formula(A_, b1, b2, order_, cfg_.margin);
      C coef = formula_coef(A_, f, b1, b2);
      out.v = 0;
      for (auto [i, w] : formula_terms(A_, f)) {
        Val ch = plain(c + 1, s + A_.exponent(i));
        C m = coef * w * x_[i];
        out.v += m * ch.v;
        out.err += std::abs(m) * ch.err;
        out.ok = out.ok && ch.ok;
      }
    }
    return memo_[key] = out;
  }

  // coefficient of 1/(form - N) at the node, on the line of facet lf at level N
  Val pole(int64_t c, int64_t s, Facet lf, int64_t N) {
    int64_t gap = lf == Facet::Zero ? s - N : A_.k() * c - s - N;
    if (gap > 0) return {0, 0, true};
    auto key = std::make_pair(c, s);
    auto it = pole_memo_.find(key);
    if (it != pole_memo_.end()) return it->second;
    C b1 = b1_ - double(c), b2 = b2_ - double(s);
    Facet f = pick_formula(A_, b1, b2, order_, cfg_.margin);
    Val out;
    out.v = 0;
    if (gap == 0 && f == lf) {
      // own denominator vanishes: the pole is b1' * sum of the regular children
      for (auto [i, w] : formula_terms(A_, f)) {
        Val ch = plain(c + 1, s + A_.exponent(i));
        C m = b1 * w * x_[i];
        out.v += m * ch.v;
        out.err += std::abs(m) * ch.err;
        out.ok = out.ok && ch.ok;
      }
    } else {
      C coef = formula_coef(A_, f, b1, b2);
      for (auto [i, w] : formula_terms(A_, f)) {
        Val ch = pole(c + 1, s + A_.exponent(i), lf, N);
        C m = coef * w * x_[i];
        out.v += m * ch.v;
        out.err += std::abs(m) * ch.err;
        out.ok = out.ok && ch.ok;
      }
    }
    return pole_memo_[key] = out;
  }

  int quadratures() const { return quadratures_; }

 private:
  const CurveMatrix& A_;
  CVec x_;
  RootSystem R_;
  double theta_;
  C b1_, b2_;
  FacetOrder order_;
  QuadConfig cfg_;
  Anchor anchor_;
  std::map<std::pair<int64_t, int64_t>, Val> memo_, pole_memo_;
  int quadratures_ = 0;
};

C eval_poly(const Poly& p, C z) {
  C s = 0;
  for (int i = p.degree(); i >= 0; --i) s = s * z + to_double(p.coeff(i));
  return s;
}

}  // namespace

EMEvaluation euler_mellin(const CurveMatrix& A, const CVec& x, double theta, C b1, C b2, const QuadConfig& cfg,
                          Anchor anchor) {
  RootSystem R = roots_and_components(A, x);
  if (R.singular) fail(ErrorKind::Domain, "singular", "x lies on the singular locus");
  for (double a : R.args)
    for (int m = -2; m <= 2; ++m)
      if (std::abs(theta - a - 2 * M_PI * m) < 1e-12)
        fail(ErrorKind::Domain, "coamoeba", "ray direction meets a root argument");
  return direct_with_roots(A, x, R, theta, b1, b2, cfg, anchor);
}

C extension_shift(const CurveMatrix& A, const CVec& x, C b1, C b2, Facet f, const std::function<C(C, C)>& M) {
  C coef = formula_coef(A, f, b1, b2);
  C s = 0;
  for (auto [i, w] : formula_terms(A, f)) s += w * x[i] * M(b1 - 1.0, b2 - double(A.exponent(i)));
  return coef * s;
}

EMEvaluation extended_euler_mellin(const CurveMatrix& A, const CVec& x, double theta, C b1, C b2, FacetOrder order,
                                   const QuadConfig& cfg, Anchor anchor) {
  Extender ext(A, x, theta, b1, b2, order, cfg, anchor);
  auto v = ext.plain(0, 0);
  EMEvaluation e;
  e.value = v.v;
  e.error = v.err;
  e.converged = v.ok;
  e.theta = theta;
  e.b1 = b1;
  e.b2 = b2;
  e.anchor = anchor;
  e.quadratures = ext.quadratures();
  e.method = e.quadratures == 1 && in_domain(A, b1, b2, cfg.margin) ? "direct-ray" : "extension-shifted";
  return e;
}

Anchor polar_anchor(Facet f) { return f == Facet::Zero ? Anchor::Zero : Anchor::Infinity; }

C polar_kappa(int64_t N, C lambda) {
  if (N == 0) return 1.0;
  double fact = 1;
  for (int64_t i = 2; i < N; ++i) fact *= double(i);
  return (N % 2 ? -1.0 : 1.0) * fact * lambda;
}

EMEvaluation regularized_ratio(const CurveMatrix& A, const CVec& x, double theta, Facet f, int64_t N, C lambda,
                               FacetOrder order, const QuadConfig& cfg) {
  if (!polar_level_semigroup(A, f).contains(N))
    fail(ErrorKind::Domain, "non-polar", "level " + std::to_string(N) + " is not polar");
  C b2 = f == Facet::Zero ? C(double(N)) : double(A.k()) * lambda - double(N);
  Anchor anchor = polar_anchor(f);
  Extender ext(A, x, theta, lambda, b2, order, cfg, anchor);
  auto p = ext.pole(0, 0, f, N);
  double fact = 1;
  for (int64_t i = 2; i <= N; ++i) fact *= double(i);
  double sign = (N + 1) % 2 ? -1.0 : 1.0;
  EMEvaluation e;
  e.value = sign * fact * p.v;
  e.error = fact * p.err;
  e.converged = p.ok;
  e.theta = theta;
  e.b1 = lambda;
  e.b2 = b2;
  e.anchor = anchor;
  e.method = "regularized";
  e.quadratures = ext.quadratures();
  return e;
}

C evaluate_series(const FiniteSeries& s, const CVec& x, C lambda) {
  if (s.at) fail(ErrorKind::Validation, "specialized", "series is already specialized");
  C total = 0;
  for (const auto& t : s.terms) {
    C logm = 0;
    for (size_t i = 0; i < t.exp.size(); ++i) {
      C e = to_double(t.exp[i].c0) + to_double(t.exp[i].c1) * lambda;
      if (e != 0.0) logm += e * std::log(x[i]);
    }
    total += eval_poly(t.coef.num(), lambda) / eval_poly(t.coef.den(), lambda) * std::exp(logm);
  }
  return total;
}

}  // namespace curvehyp
