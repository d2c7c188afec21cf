#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "curvehyp/error.hpp"
#include "curvehyp/series.hpp"

namespace curvehyp {

IVec BColumn::kernel_vector(int n) const {
  IVec u(n, 0);
  u[0] = -b1;
  u[i] = bii;
  u[n - 1] = -bn;
  return u;
}

std::vector<BColumn> b_matrix(const CurveMatrix& A) {
  std::vector<BColumn> B;
  const int64_t k = A.k();
  for (int i = 1; i + 1 < A.n(); ++i) {
    int64_t g = std::gcd(A.exponent(i), k);
    B.push_back({i, (k - A.exponent(i)) / g, k / g, A.exponent(i) / g});
  }
  return B;
}

namespace {

Q determinant(std::vector<std::vector<Q>> m) {
  const size_t d = m.size();
  Q det = 1;
  for (size_t c = 0; c < d; ++c) {
    size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < d; ++r) {
      Q f = m[r][c] / m[c][c];
      for (size_t j = c; j < d; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

bool b_spans_kernel(const CurveMatrix& A) {
  const int n = A.n();
  if (n <= 2) return true;
  auto B = b_matrix(A);
  std::vector<IVec> cols;
  for (const auto& c : B) cols.push_back(c.kernel_vector(n));
  Z g = 0;
  for (int drop1 = 0; drop1 < n; ++drop1) {
    for (int drop2 = drop1 + 1; drop2 < n; ++drop2) {
      std::vector<std::vector<Q>> m;
      for (int r = 0; r < n; ++r) {
        if (r == drop1 || r == drop2) continue;
        std::vector<Q> row;
        for (const auto& c : cols) row.push_back(Q(c[r]));
        m.push_back(row);
      }
      Z d = determinant(m).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g == 1;
}

std::vector<Q> b_coordinates(const CurveMatrix& A, const IVec& u) {
  std::vector<Q> l;
  for (const auto& c : b_matrix(A)) l.push_back(Q(u[c.i], c.bii));
  for (auto& q : l) q.canonicalize();
  return l;
}

std::vector<OrderedPartition> ordered_partitions(const std::vector<int64_t>& parts, int64_t N) {
  for (auto p : parts)
    if (p <= 0) fail(ErrorKind::Validation, "parts", "partition parts must be positive");
  std::vector<size_t> idx(parts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return parts[a] < parts[b]; });
  std::vector<OrderedPartition> out;
  OrderedPartition cur;
  cur.multiplicity.assign(parts.size(), 0);
  std::function<void(int64_t)> rec = [&](int64_t rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t j : idx) {
      if (parts[j] > rest) continue;
      cur.parts.push_back(parts[j]);
      cur.multiplicity[j]++;
      cur.partial.push_back((cur.partial.empty() ? 0 : cur.partial.back()) + parts[j]);
      rec(rest - parts[j]);
      cur.parts.pop_back();
      cur.multiplicity[j]--;
      cur.partial.pop_back();
    }
  };
  if (N >= 0) rec(N);
  return out;
}

// ---- finite series ----

namespace {

bool exp_less(const std::vector<Affine>& a, const std::vector<Affine>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_terms(std::vector<LTerm>& t) {
  std::sort(t.begin(), t.end(), [](const LTerm& a, const LTerm& b) { return exp_less(a.exp, b.exp); });
}

struct PartSet {
  std::vector<int> var;         // variable carrying each part
  std::vector<int64_t> part;    // part sizes
  std::vector<int64_t> weight;  // coefficient factor per part
  int base;                     // variable carrying lambda
};

PartSet part_set(const CurveMatrix& A, Facet f) {
  PartSet s;
  const int n = A.n();
  if (f == Facet::Zero) {
    s.base = 0;
    for (int i = 1; i < n; ++i) {
      s.var.push_back(i);
      s.part.push_back(A.exponent(i));
      s.weight.push_back(A.exponent(i));
    }
  } else {
    s.base = n - 1;
    for (int i = 0; i + 1 < n; ++i) {
      s.var.push_back(i);
      s.part.push_back(A.k() - A.exponent(i));
      s.weight.push_back(A.k() - A.exponent(i));
    }
  }
  return s;
}

}  // namespace

Param FiniteSeries::parameter(const CurveMatrix& A) const {
  ResonantLine L = make_line(A, facet, level);
  Affine lam = at ? Affine(*at) : Affine::beta1();
  return L.at(A, lam);
}

FiniteSeries FiniteSeries::evaluate(const Q& lambda) const {
  if (at) fail(ErrorKind::Validation, "specialized", "series is already specialized");
  FiniteSeries s = *this;
  s.terms.clear();
  s.at = lambda;
  for (const auto& t : terms) {
    Q c = t.coef.eval(lambda);
    if (c == 0) continue;
    LTerm e;
    for (const auto& a : t.exp) e.exp.push_back(Affine(a.eval(lambda, 0)));
    e.coef = RatFunc(c);
    s.terms.push_back(e);
  }
  sort_terms(s.terms);
  return s;
}

FiniteSeries FiniteSeries::unstripped() const {
  FiniteSeries s = *this;
  RatFunc f = at ? RatFunc(removed.eval(*at) * scale) : RatFunc(removed * scale);
  for (auto& t : s.terms) t.coef = t.coef * f;
  s.removed = Poly(Q(1));
  s.scale = 1;
  return s;
}

std::vector<std::vector<Q>> FiniteSeries::exact_support() const {
  std::vector<std::vector<Q>> out;
  for (const auto& t : terms) {
    std::vector<Q> e;
    for (const auto& a : t.exp) {
      if (!a.is_constant()) fail(ErrorKind::Validation, "specialized", "support needs a specialized series");
      e.push_back(a.c0);
    }
    out.push_back(e);
  }
  return out;
}

std::string FiniteSeries::str() const {
  std::ostringstream os;
  for (size_t j = 0; j < terms.size(); ++j) {
    const auto& t = terms[j];
    if (j) os << " + ";
    bool unit = t.coef == RatFunc(Q(1));
    if (!unit) os << "(" << t.coef.str() << ")";
    bool any = false;
    for (size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i].is_zero()) continue;
      if (any || !unit) os << "*";
      os << "x" << i + 1;
      if (!(t.exp[i] == Affine(1))) os << "^(" << t.exp[i].str("l", "b2") << ")";
      any = true;
    }
    if (!any && unit) os << "1";
  }
  if (terms.empty()) os << "0";
  return os.str();
}

FiniteSeries polar_line_family(const CurveMatrix& A, Facet f, int64_t N) {
  if (!polar_level_semigroup(A, f).contains(N))
    fail(ErrorKind::Domain, "non-polar", "level " + std::to_string(N) + " is not polar on " + facet_name(f));
  PartSet ps = part_set(A, f);
  const size_t P = ps.part.size();
  // F(m): sum over orderings of the parts with multiplicity m of prod 1/(suffix sums)
  std::map<IVec, Q> memo;
  std::function<Q(const IVec&)> F = [&](const IVec& m) -> Q {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int64_t w = 0;
    for (size_t j = 0; j < P; ++j) w += m[j] * ps.part[j];
    Q s = 0;
    if (w == 0) {
      s = 1;
    } else {
      IVec sub = m;
      for (size_t j = 0; j < P; ++j) {
        if (!m[j]) continue;
        sub[j]--;
        s += F(sub);
        sub[j]++;
      }
      s /= w;
    }
    return memo[m] = s;
  };
  FiniteSeries out;
  out.facet = f;
  out.level = N;
  IVec m(P, 0);
  std::function<void(size_t, int64_t)> rec = [&](size_t j, int64_t rest) {
    if (j == P) {
      if (rest != 0) return;
      int64_t len = std::accumulate(m.begin(), m.end(), int64_t{0});
      Poly c(Q(N == 0 ? 1 : 0));
      if (N != 0) c = Poly(Q(N) * F(m));
      for (int64_t i = 1; i < len; ++i) c = c * Poly::linear_root(Q(i));
      for (size_t t = 0; t < P; ++t)
        for (int64_t e = 0; e < m[t]; ++e) c = c * Q(ps.weight[t]);
      LTerm term;
      term.exp.assign(A.n(), Affine(0));
      for (size_t t = 0; t < P; ++t) term.exp[ps.var[t]] = Affine(Q(m[t]));
      term.exp[ps.base] = Affine::beta1() - Affine(Q(len));
      term.coef = RatFunc(c);
      out.terms.push_back(term);
      return;
    }
    for (m[j] = 0; m[j] * ps.part[j] <= rest; ++m[j]) rec(j + 1, rest - m[j] * ps.part[j]);
    m[j] = 0;
  };
  rec(0, N);
  sort_terms(out.terms);
  return out;
}

FiniteSeries polar_line_solution(const CurveMatrix& A, Facet f, int64_t N) {
  FiniteSeries s = polar_line_family(A, f, N);
  Poly g;
  for (const auto& t : s.terms) g = gcd(g, t.coef.num());
  if (g.is_zero()) fail(ErrorKind::Internal, "finite-series", "empty polar line family");
  for (auto& t : s.terms) {
    Poly q, r;
    t.coef.num().divmod(g, q, r);
    if (!r.is_zero()) fail(ErrorKind::Internal, "finite-series", "gcd does not divide a coefficient");
    t.coef = RatFunc(q);
  }
  s.removed = g;
  s.scale = s.terms.front().coef.num().lead();
  for (auto& t : s.terms) t.coef = t.coef * RatFunc(Q(1) / s.scale);
  return s;
}

bool proportional(const FiniteSeries& a, const FiniteSeries& b) {
  if (a.terms.size() != b.terms.size() || a.terms.empty()) return false;
  auto sa = a.exact_support(), sb = b.exact_support();
  if (sa != sb) return false;
  Q ratio = a.terms[0].coef.eval(0) / b.terms[0].coef.eval(0);
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].coef.eval(0) != ratio * b.terms[i].coef.eval(0)) return false;
  return true;
}

CoincidenceResult coincidence_at_intersection(const CurveMatrix& A, const Q& b1, const Q& b2) {
  Q m = Q(A.k()) * b1 - b2;
  bool ok = is_integer(b2) && is_integer(m) && polar_level_semigroup(A, Facet::Zero).contains(to_int64(b2)) &&
            polar_level_semigroup(A, Facet::K).contains(to_int64(m));
  if (!ok) fail(ErrorKind::Domain, "not-double-polar", "parameter is not on two polar lines");
  CoincidenceResult r;
  r.first = polar_line_solution(A, Facet::Zero, to_int64(b2)).evaluate(b1);
  r.second = polar_line_solution(A, Facet::K, to_int64(m)).evaluate(b1);
  r.verdict = proportional(r.first, r.second) ? Coincidence::SingleSeries : Coincidence::IndependentPair;
  return r;
}

DerivativeResult parametric_derivative(const FiniteSeries& family, const Q& lambda_bar, int q) {
  if (family.at) fail(ErrorKind::Validation, "specialized", "family is already specialized");
  if (q < 0) fail(ErrorKind::Validation, "order", "derivative order must be nonnegative");
  int min_order = -1;
  for (const auto& t : family.terms) {
    if (t.coef.den().eval(lambda_bar) == 0)
      fail(ErrorKind::Domain, "pole", "coefficient has a pole at " + to_string(lambda_bar));
    int o = t.coef.num().root_order(lambda_bar);
    min_order = min_order < 0 ? o : std::min(min_order, o);
  }
  DerivativeResult r;
  r.vanishing_order = std::max(min_order, 0);
  r.series = family;
  r.series.terms.clear();
  r.series.at = lambda_bar;
  if (min_order < 0) return r;
  if (min_order < q)
    fail(ErrorKind::Domain, "log-terms",
         "a coefficient vanishes to order " + std::to_string(min_order) + " < " + std::to_string(q));
  if (min_order > q) {
    r.zero = true;
    return r;
  }
  for (const auto& t : family.terms) {
    RatFunc d = t.coef;
    for (int j = 0; j < q; ++j) d = d.derivative();
    Q c = d.eval(lambda_bar);
    if (c == 0) continue;
    LTerm e;
    for (const auto& a : t.exp) e.exp.push_back(Affine(a.eval(lambda_bar, 0)));
    e.coef = RatFunc(c);
    r.series.terms.push_back(e);
  }
  sort_terms(r.series.terms);
  return r;
}

}  // namespace curvehyp
