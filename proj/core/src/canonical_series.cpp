#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "curvehyp/error.hpp"
#include "curvehyp/series.hpp"

namespace curvehyp {

namespace {

std::string ivec_str(const IVec& u) {
  std::string s = "(";
  for (size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  return s + ")";
}

int64_t norm1(const IVec& u) {
  int64_t s = 0;
  for (auto x : u) s += std::abs(x);
  return s;
}

Param degree_of(const CurveMatrix& A, const std::vector<Affine>& v) {
  Param p{Affine(0), Affine(0)};
  for (int i = 0; i < A.n(); ++i) {
    p.b1 = p.b1 + v[i];
    p.b2 = p.b2 + v[i] * Q(A.exponent(i));
  }
  return p;
}

bool integer_const(const Affine& a) { return a.is_integer_constant(); }

}  // namespace

Q Coef::value() const {
  if (!is_exact()) fail(ErrorKind::Validation, "symbolic", "coefficient is not exact");
  return scalar;
}

std::string Coef::str() const {
  std::ostringstream os;
  bool any = false;
  if (scalar != 1 || num.empty()) {
    os << scalar.get_str();
    any = true;
  }
  for (const auto& f : num) {
    os << (any ? "*" : "") << "(" << f.str() << ")";
    any = true;
  }
  for (const auto& f : den) os << "/(" << f.str() << ")";
  return os.str();
}

std::vector<Affine> TruncatedSeries::exponent(const IVec& u) const {
  std::vector<Affine> e = base.v;
  for (size_t i = 0; i < e.size(); ++i) e[i] = e[i] + Affine(Q(u[i]));
  return e;
}

const SeriesTerm* TruncatedSeries::find(const IVec& u) const {
  for (const auto& t : terms)
    if (t.u == u) return &t;
  return nullptr;
}

int64_t default_bound(const CurveMatrix& A) { return 4 * A.k(); }

TruncatedSeries canonical_series(const CurveMatrix& A, const FakeExponent& fe, const Param& beta, int64_t bound,
                                 SeriesMode mode) {
  const int n = A.n();
  const int64_t k = A.k();
  const auto& v = fe.v;
  if (static_cast<int>(v.size()) != n) fail(ErrorKind::Validation, "length", "exponent has wrong length");
  for (int i = 1; i + 1 < n; ++i)
    if (!integer_const(v[i]) || v[i].c0 < 0)
      fail(ErrorKind::Validation, "exponent", "middle exponent entries must be natural numbers");
  TruncatedSeries s;
  s.base = fe;
  s.beta = beta;
  s.bound = bound;
  s.mode = mode;
  IVec u(n, 0);
  auto emit = [&]() {
    if (norm1(u) > bound) return;
    if (mode == SeriesMode::Restricted) {
      for (int i = 0; i < n; ++i) {
        if (!integer_const(v[i])) continue;
        bool neg = v[i].c0 < 0;
        if ((v[i].c0 + u[i] < 0) != neg) return;
      }
    }
    Coef c;
    for (int i = 0; i < n; ++i) {
      for (int64_t t = 0; t < -u[i]; ++t) {  // [v_i]_{-u_i}
        Affine f = v[i] - Affine(Q(t));
        if (f.is_constant()) {
          if (f.c0 == 0) return;
          c.scalar *= f.c0;
        } else {
          c.num.push_back(f);
        }
      }
      for (int64_t t = 1; t <= u[i]; ++t) {  // [v_i + u_i]_{u_i}
        Affine f = v[i] + Affine(Q(t));
        if (f.is_constant()) {
          if (f.c0 == 0) {
            if (mode == SeriesMode::Restricted)
              fail(ErrorKind::Internal, "zero-denominator", "restricted index set hit a zero denominator");
            fail(ErrorKind::Domain, "zero-denominator",
                 "zero denominator at u=" + ivec_str(u) + " in coordinate " + std::to_string(i + 1));
          }
          c.scalar /= f.c0;
        } else {
          c.den.push_back(f);
        }
      }
    }
    s.terms.push_back({u, c});
  };
  // middle coordinates range over u_i >= -r_i; u_1 and u_n are then forced
  std::function<void(int, int64_t)> rec = [&](int i, int64_t budget) {
    if (i == n - 1) {
      int64_t s1 = 0, s2 = 0;
      for (int j = 1; j + 1 < n; ++j) {
        s1 += u[j];
        s2 += A.exponent(j) * u[j];
      }
      if (s2 % k != 0) return;
      u[n - 1] = -s2 / k;
      u[0] = -s1 - u[n - 1];
      if (n == 2) u[0] = u[1] = 0;
      emit();
      u[0] = u[n - 1] = 0;
      return;
    }
    int64_t lo = -to_int64(v[i].c0);
    for (int64_t x = std::max(lo, -budget); x <= budget; ++x) {
      u[i] = x;
      rec(i + 1, budget - std::abs(x));
    }
    u[i] = 0;
  };
  if (n == 2) {
    emit();
  } else {
    rec(1, bound);
  }
  std::sort(s.terms.begin(), s.terms.end(), [](const SeriesTerm& a, const SeriesTerm& b) {
    int64_t na = norm1(a.u), nb = norm1(b.u);
    return na != nb ? na < nb : a.u < b.u;
  });
  if (s.terms.empty() || norm1(s.terms.front().u) != 0)
    fail(ErrorKind::Internal, "series", "leading term missing");
  return s;
}

std::vector<int> negative_support(const std::vector<Affine>& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (integer_const(v[i]) && v[i].c0 < 0) s.push_back(static_cast<int>(i));
  return s;
}

bool has_minimal_negative_support(const CurveMatrix& A, const std::vector<Affine>& v) {
  const int n = A.n();
  for (const auto& a : v)
    if (!a.is_constant()) fail(ErrorKind::Validation, "exact", "negative support needs an exact exponent");
  for (int i = 1; i + 1 < n; ++i)
    if (!integer_const(v[i]) || v[i].c0 < 0)
      fail(ErrorKind::Validation, "exponent", "middle exponent entries must be natural numbers");
  auto S = negative_support(v);
  if (S.empty()) return true;
  Param beta = degree_of(A, v);
  Q b1 = beta.b1.c0, b2 = beta.b2.c0;
  bool int1 = integer_const(v[0]), intn = integer_const(v[n - 1]);
  // u in the kernel moves v inside its class mod Z^n; with natural middle entries the
  // reachable supports are decided by the two facet semigroups
  auto first_free = [&] {  // some w with w_2..w_{n-1} >= 0, w_n >= 0 (or non-integer)
    return is_integer(b2) && semigroup_Gk(A).contains(to_int64(b2));
  };
  auto last_free = [&] {  // some w with w_1..w_{n-1} >= 0
    Q m = Q(A.k()) * b1 - b2;
    return is_integer(m) && semigroup_G0(A).contains(to_int64(m));
  };
  auto all_free = [&] { return is_integer(b1) && is_integer(b2) && in_NA(A, to_int64(b1), to_int64(b2)); };
  bool smaller;
  if (S.size() == 2) {
    smaller = first_free() || last_free();
  } else if (S[0] == 0) {
    smaller = intn ? all_free() : last_free();
  } else {
    smaller = int1 ? all_free() : first_free();
  }
  return !smaller;
}

// ---- annihilation ----

namespace {

struct ExpLess {
  bool operator()(const std::vector<Affine>& a, const std::vector<Affine>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

Poly affine_poly(const Affine& a) {
  if (a.c2 != 0) fail(ErrorKind::Validation, "symbolic", "finite series exponents may only involve lambda");
  return Poly(std::vector<Q>{a.c0, a.c1});
}

Poly falling(const std::vector<Affine>& v, const IVec& w) {
  Poly p(Q(1));
  for (size_t j = 0; j < v.size(); ++j)
    for (int64_t t = 0; t < w[j]; ++t) p = p * affine_poly(v[j] - Affine(Q(t)));
  return p;
}

std::string exp_str(const std::vector<Affine>& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + e[i].str("l", "b2");
  return s + ")";
}

const GroebnerBasis& cached_basis(const CurveMatrix& A) {
  static thread_local std::map<IVec, GroebnerBasis> cache;
  auto it = cache.find(A.exponents());
  if (it == cache.end())
    it = cache.emplace(A.exponents(), toric_ideal_groebner(A, TermOrder::d1_first(A.n()))).first;
  return it->second;
}

}  // namespace

Verdict annihilation_check(const FiniteSeries& s, const CurveMatrix& A) {
  return annihilation_check(s, A, s.parameter(A));
}

Verdict annihilation_check(const FiniteSeries& s, const CurveMatrix& A, const Param& beta) {
  Verdict v;
  for (const auto& t : s.terms) {
    if (t.coef.is_zero()) continue;
    Param d = degree_of(A, t.exp);
    if (!(d.b1 == beta.b1)) {
      v.pass = false;
      v.failure = "first Euler operator at x^" + exp_str(t.exp);
      return v;
    }
    if (!(d.b2 == beta.b2)) {
      v.pass = false;
      v.failure = "second Euler operator at x^" + exp_str(t.exp);
      return v;
    }
  }
  for (const auto& g : cached_basis(A).elems()) {
    std::map<std::vector<Affine>, RatFunc, ExpLess> res;
    for (const auto& t : s.terms) {
      for (int side = 0; side < 2; ++side) {
        const IVec& w = side == 0 ? g.lead : g.trail;
        std::vector<Affine> e = t.exp;
        for (size_t j = 0; j < e.size(); ++j) e[j] = e[j] - Affine(Q(w[j]));
        RatFunc c = t.coef * RatFunc(falling(t.exp, w));
        res[e] = side == 0 ? res[e] + c : res[e] - c;
      }
    }
    for (const auto& [e, c] : res) {
      if (!c.is_zero()) {
        v.pass = false;
        v.failure = "binomial " + ivec_str(g.lead) + "-" + ivec_str(g.trail) + " leaves x^" + exp_str(e);
        return v;
      }
    }
  }
  return v;
}

Verdict annihilation_check(const TruncatedSeries& s, const CurveMatrix& A) {
  if (!s.beta.is_exact()) fail(ErrorKind::Validation, "exact", "annihilation of a series needs an exact parameter");
  Verdict v;
  const int n = A.n();
  std::vector<Q> base(n);
  for (int i = 0; i < n; ++i) base[i] = s.base.v[i].c0;
  for (const auto& t : s.terms) {
    Param d = degree_of(A, s.exponent(t.u));
    if (!(d.b1 == s.beta.b1) || !(d.b2 == s.beta.b2)) {
      v.pass = false;
      v.failure = "Euler operator at u=" + ivec_str(t.u);
      return v;
    }
  }
  for (const auto& g : cached_basis(A).elems()) {
    std::map<IVec, Q> res;  // keyed by the exponent offset from v
    for (const auto& t : s.terms) {
      Q c = t.coef.value();
      for (int side = 0; side < 2; ++side) {
        const IVec& w = side == 0 ? g.lead : g.trail;
        Q f = c;
        for (int j = 0; j < n; ++j)
          for (int64_t r = 0; r < w[j]; ++r) f *= base[j] + t.u[j] - r;
        IVec key(n);
        for (int j = 0; j < n; ++j) key[j] = t.u[j] - w[j];
        if (side == 0) res[key] += f;
        else res[key] -= f;
      }
    }
    for (const auto& [key, c] : res) {
      if (c == 0) continue;
      IVec src1(n), src2(n);
      for (int j = 0; j < n; ++j) {
        src1[j] = key[j] + g.lead[j];
        src2[j] = key[j] + g.trail[j];
      }
      if (std::max(norm1(src1), norm1(src2)) > s.bound) {
        v.excused++;
        continue;
      }
      v.pass = false;
      v.failure = "binomial " + ivec_str(g.lead) + "-" + ivec_str(g.trail) + " leaves offset " + ivec_str(key);
      return v;
    }
  }
  return v;
}

}  // namespace curvehyp
