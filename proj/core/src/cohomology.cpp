#include "curvehyp/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "curvehyp/error.hpp"
#include "curvehyp/series.hpp"

namespace curvehyp {

namespace {

const GroebnerBasis& gb_for(const CurveMatrix& A) {
  static thread_local std::map<IVec, GroebnerBasis> cache;
  auto it = cache.find(A.exponents());
  if (it == cache.end())
    it = cache.emplace(A.exponents(), toric_ideal_groebner(A, TermOrder::d1_first(A.n()))).first;
  return it->second;
}

int64_t shift_bound(const CurveMatrix& A, int64_t a1, int64_t a2) {
  int64_t F = std::max<int64_t>({semigroup_G0(A).frobenius(), semigroup_Gk(A).frobenius(), 0});
  return F + A.k() + std::abs(a1) + std::abs(a2);
}

bool shifted_search(const CurveMatrix& A, int64_t a1, int64_t a2, bool w1, bool wn, int64_t bound) {
  const int64_t k = A.k();
  for (int64_t s = 0; s <= (w1 ? bound : 0); ++s)
    for (int64_t t = 0; t <= (wn ? bound : 0); ++t)
      if (in_NA(A, a1 + s + t, a2 + k * t)) return true;
  return false;
}

// middle coordinate vectors (indices 1..n-2) with sum_i w_i m_i <= cap, in lex order
void for_each_middle(const CurveMatrix& A, const std::vector<int64_t>& w, int64_t cap,
                     const std::function<void(const IVec&)>& fn) {
  const int n = A.n();
  IVec m(n, 0);
  std::function<void(int, int64_t)> rec = [&](int i, int64_t left) {
    if (i == n - 1) {
      fn(m);
      return;
    }
    for (int64_t c = 0; w[i] * c <= left; ++c) {
      m[i] = c;
      rec(i + 1, left - w[i] * c);
      if (w[i] == 0) break;
    }
    m[i] = 0;
  };
  if (cap >= 0) rec(1, cap);
}

int64_t middle_sum(const IVec& m) {
  int64_t s = 0;
  for (size_t i = 1; i + 1 < m.size(); ++i) s += m[i];
  return s;
}

int64_t middle_weight(const CurveMatrix& A, const IVec& m) {
  int64_t s = 0;
  for (int i = 1; i + 1 < A.n(); ++i) s += A.exponent(i) * m[i];
  return s;
}


// representative monomial of the graded piece alpha: which coordinates may go negative
std::optional<IVec> representative(const CurveMatrix& A, int64_t a1, int64_t a2, bool free1, bool freen) {
  const int n = A.n();
  const int64_t k = A.k();
  std::optional<IVec> best;
  auto better = [&](const IVec& v) {
    if (!best) return true;
    // localized coordinate as small as possible, then lex
    int key = free1 ? 0 : (freen ? n - 1 : 0);
    if (free1 && freen) {
      int64_t a = middle_sum(v), b = middle_sum(*best);
      if (a != b) return a < b;
      return v < *best;
    }
    if (v[key] != (*best)[key]) return v[key] < (*best)[key];
    return v < *best;
  };
  auto consider = [&](const IVec& mid) {
    int64_t s = middle_weight(A, mid);
    if (((a2 - s) % k + k) % k != 0) return;
    IVec v = mid;
    v[n - 1] = (a2 - s) / k;
    v[0] = a1 - middle_sum(mid) - v[n - 1];
    if (!free1 && v[0] < 0) return;
    if (!freen && v[n - 1] < 0) return;
    if (better(v)) best = v;
  };
  std::vector<int64_t> wk(n), wg(n), ones(n, 1);
  for (int i = 0; i < n; ++i) {
    wk[i] = A.exponent(i);
    wg[i] = k - A.exponent(i);
  }
  if (free1 && freen) {
    // k - 1 middle parts reach every residue class
    for_each_middle(A, ones, k, consider);
  } else if (freen) {
    for_each_middle(A, wg, k * a1 - a2, consider);
  } else {
    for_each_middle(A, wk, a2, consider);
  }
  return best;
}

void certify_entry(const GroebnerBasis& gb, const IVec& s, const IVec& t) {
  if (!equal_in_localization(gb, s, t))
    fail(ErrorKind::Internal, "certificate", "basis monomials " + monomial_str(s) + " and " + monomial_str(t) +
                                                 " differ in the localization");
}

}  // namespace

int64_t matrix_rank(QMatrix m) {
  int64_t r = 0;
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && r < static_cast<int64_t>(rows); ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == static_cast<size_t>(r) || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

bool in_NA_plus_Z(const CurveMatrix& A, int64_t a1, int64_t a2, bool with_a1, bool with_an) {
  const int64_t B = shift_bound(A, a1, a2);
  bool found = shifted_search(A, a1, a2, with_a1, with_an, B);
  if (!found && shifted_search(A, a1, a2, with_a1, with_an, B + A.k()))
    fail(ErrorKind::Internal, "shift-bound", "membership changed in the extra shell");
  return found;
}

std::tuple<int64_t, int64_t, int64_t> graded_dims(const CurveMatrix& A, int64_t a1, int64_t a2) {
  int64_t d0 = in_NA(A, a1, a2) ? 1 : 0;
  int64_t d1 = (in_NA_plus_Z(A, a1, a2, true, false) ? 1 : 0) + (in_NA_plus_Z(A, a1, a2, false, true) ? 1 : 0);
  int64_t d2 = in_NA_plus_Z(A, a1, a2, true, true) ? 1 : 0;
  return {d0, d1, d2};
}

IshidaPiece ishida_piece(const CurveMatrix& A, int64_t a1, int64_t a2) {
  IshidaPiece P;
  P.alpha = {a1, a2};
  const auto& gb = gb_for(A);
  bool m0 = in_NA(A, a1, a2);
  bool mf = in_NA_plus_Z(A, a1, a2, true, false);
  bool ml = in_NA_plus_Z(A, a1, a2, false, true);
  bool m2 = in_NA_plus_Z(A, a1, a2, true, true);
  auto pick = [&](bool member, bool f1, bool fn) -> std::optional<IVec> {
    if (!member) return std::nullopt;
    auto r = representative(A, a1, a2, f1, fn);
    if (!r) fail(ErrorKind::Internal, "representative", "member of a localization without a monomial");
    return r;
  };
  P.basis0 = pick(m0, false, false);
  P.basis1_first = pick(mf, true, false);
  P.basis1_last = pick(ml, false, true);
  P.basis2 = pick(m2, true, true);
  P.d0 = m0;
  P.d1 = (mf ? 1 : 0) + (ml ? 1 : 0);
  P.d2 = m2;

  std::vector<const IVec*> c1;
  std::vector<int> sign1;
  if (P.basis1_first) {
    c1.push_back(&*P.basis1_first);
    sign1.push_back(-1);
  }
  if (P.basis1_last) {
    c1.push_back(&*P.basis1_last);
    sign1.push_back(1);
  }
  P.delta0.assign(P.d1, std::vector<Q>(P.d0, Q(0)));
  if (P.basis0)
    for (size_t r = 0; r < c1.size(); ++r) {
      certify_entry(gb, *P.basis0, *c1[r]);
      P.delta0[r][0] = 1;
    }
  P.delta1.assign(P.d2, std::vector<Q>(P.d1, Q(0)));
  if (P.basis2)
    for (size_t c = 0; c < c1.size(); ++c) {
      certify_entry(gb, *c1[c], *P.basis2);
      P.delta1[0][c] = sign1[c];
    }
  int64_t r0 = matrix_rank(P.delta0), r1 = matrix_rank(P.delta1);
  P.h0 = P.d0 - r0;
  P.h1 = P.d1 - r0 - r1;
  P.h2 = P.d2 - r1;
  return P;
}

Window cohomology_box(const CurveMatrix& A, int64_t margin) {
  const int64_t B = rank_jumping_parameters(A).box_bound;
  return {-margin, (2 * B) / A.k() + margin, -margin, B + margin};
}

std::vector<std::pair<int64_t, int64_t>> h1_support(const CurveMatrix& A, const Window& box) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t b1 = box.x0; b1 <= box.x1; ++b1)
    for (int64_t b2 = box.y0; b2 <= box.y1; ++b2)
      if (ishida_piece(A, b1, b2).h1 != 0) out.emplace_back(b1, b2);
  return out;
}

std::string monomial_str(const IVec& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << "∂" << (i + 1);
    if (v[i] != 1) os << '^' << v[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string CocycleGenerator::str() const { return monomial_str(v) + " | " + monomial_str(v_prime); }

bool equal_in_localization(const GroebnerBasis& gb, const IVec& v, const IVec& w, int64_t* shift) {
  const size_t n = v.size();
  for (size_t i = 1; i + 1 < n; ++i)
    if (v[i] < 0 || w[i] < 0) fail(ErrorKind::Validation, "localization", "middle exponents must be nonnegative");
  int64_t m = std::max<int64_t>({-v[0], -v[n - 1], -w[0], -w[n - 1], 0});
  IVec a = v, b = w;
  a[0] += m;
  a[n - 1] += m;
  b[0] += m;
  b[n - 1] += m;
  if (shift) *shift = m;
  return gb.normal_form(a) == gb.normal_form(b);
}

CocycleGenerator cocycle_generator(const CurveMatrix& A, int64_t a1, int64_t a2) {
  if (!in_rank_jump_set(A, Param::exact(Q(a1), Q(a2))))
    fail(ErrorKind::Domain, "not-rank-jump", "cocycles are produced only at rank-jumping parameters");
  const int n = A.n();
  auto pick = [&](Facet f, int64_t N, int neg) {
    FiniteSeries s = polar_line_solution(A, f, N).evaluate(Q(a1));
    for (const auto& e : s.exact_support()) {
      IVec v(n);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        if (!is_integer(e[i])) ok = false;
        else v[i] = to_int64(e[i]);
      }
      if (!ok) continue;
      bool pattern = v[neg] < 0;
      for (int i = 0; i < n; ++i)
        if (i != neg && v[i] < 0) pattern = false;
      if (pattern && A.degree(v) == std::make_pair(a1, a2)) return v;
    }
    fail(ErrorKind::Internal, "cocycle", "finite solution has no monomial with the required negative support");
  };
  CocycleGenerator g;
  g.v = pick(Facet::Zero, a2, 0);
  g.v_prime = pick(Facet::K, A.k() * a1 - a2, n - 1);
  g.certified = equal_in_localization(gb_for(A), g.v, g.v_prime, &g.m);
  return g;
}

}  // namespace curvehyp
