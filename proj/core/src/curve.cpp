#include "curvehyp/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "curvehyp/error.hpp"

namespace curvehyp {

std::string facet_name(Facet f) { return f == Facet::Zero ? "facet-0" : "facet-k"; }

CurveMatrix CurveMatrix::make(const IVec& exponents) {
  if (exponents.size() < 2)
    fail(ErrorKind::Validation, "length", "the curve matrix needs at least two columns");
  if (exponents[0] != 0) fail(ErrorKind::Validation, "k1", "the first exponent must be 0");
  for (size_t i = 1; i < exponents.size(); ++i)
    if (exponents[i] <= exponents[i - 1])
      fail(ErrorKind::Validation, "monotone", "exponents must be strictly increasing");
  int64_t g = 0;
  for (size_t i = 1; i < exponents.size(); ++i) g = std::gcd(g, exponents[i]);
  if (g != 1) fail(ErrorKind::Validation, "gcd", "gcd(k_2,...,k_n) = " + std::to_string(g) + ", expected 1");
  CurveMatrix A;
  A.k_ = exponents;
  return A;
}

std::pair<int64_t, int64_t> CurveMatrix::normal(Facet f) const {
  return f == Facet::Zero ? std::pair<int64_t, int64_t>{0, -1} : std::pair<int64_t, int64_t>{-k(), 1};
}

std::string CurveMatrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < k_.size(); ++i) os << (i ? "," : "") << k_[i];
  return os.str();
}

std::pair<int64_t, int64_t> CurveMatrix::degree(const IVec& v) const {
  int64_t a = 0, b = 0;
  for (int i = 0; i < n(); ++i) {
    a += v[i];
    b += k_[i] * v[i];
  }
  return {a, b};
}

NumericalSemigroup::NumericalSemigroup(std::vector<int64_t> generators) {
  for (auto g : generators)
    if (g > 0) gens_.push_back(g);
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (gens_.empty()) fail(ErrorKind::Validation, "semigroup", "semigroup needs a positive generator");
  int64_t g = 0;
  for (auto x : gens_) g = std::gcd(g, x);
  if (g != 1) fail(ErrorKind::Validation, "semigroup", "generators of a numerical semigroup must be coprime");
  // grow membership until gens_[0] consecutive members appear; everything above is then a member
  const int64_t run_needed = gens_[0];
  std::vector<char> member{1};
  int64_t run = 1;
  for (int64_t m = 1; run < run_needed; ++m) {
    char in = 0;
    for (auto x : gens_)
      if (x <= m && member[m - x]) {
        in = 1;
        break;
      }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      gaps_.push_back(m);
    }
  }
  frobenius_ = gaps_.empty() ? -1 : gaps_.back();
}

bool NumericalSemigroup::contains(int64_t m) const {
  if (m < 0) return false;
  return !std::binary_search(gaps_.begin(), gaps_.end(), m);
}

NumericalSemigroup semigroup_G0(const CurveMatrix& A) {
  std::vector<int64_t> g;
  for (int i = 0; i + 1 < A.n(); ++i) g.push_back(A.k() - A.exponent(i));
  return NumericalSemigroup(g);
}

NumericalSemigroup semigroup_Gk(const CurveMatrix& A) {
  std::vector<int64_t> g;
  for (int i = 1; i < A.n(); ++i) g.push_back(A.exponent(i));
  return NumericalSemigroup(g);
}

NumericalSemigroup facet_semigroup(const CurveMatrix& A, Facet f) {
  return f == Facet::Zero ? semigroup_G0(A) : semigroup_Gk(A);
}

NumericalSemigroup polar_level_semigroup(const CurveMatrix& A, Facet f) {
  return f == Facet::Zero ? semigroup_Gk(A) : semigroup_G0(A);
}

int64_t min_parts(const CurveMatrix& A, int64_t m) {
  if (m < 0) return -1;
  std::vector<int64_t> best(m + 1, -1);
  best[0] = 0;
  for (int64_t s = 1; s <= m; ++s)
    for (int i = 1; i < A.n(); ++i) {
      int64_t p = A.exponent(i);
      if (p <= s && best[s - p] >= 0 && (best[s] < 0 || best[s - p] + 1 < best[s])) best[s] = best[s - p] + 1;
    }
  return best[m];
}

bool in_NA(const CurveMatrix& A, int64_t b1, int64_t b2) {
  if (b1 < 0 || b2 < 0) return false;
  int64_t p = min_parts(A, b2);
  return p >= 0 && p <= b1;
}

namespace {

bool rank_jump_point(const CurveMatrix& A, const NumericalSemigroup& Gk, const NumericalSemigroup& G0,
                     int64_t b1, int64_t b2) {
  return Gk.contains(b2) && G0.contains(A.k() * b1 - b2) && !in_NA(A, b1, b2);
}

}  // namespace

RankJumpResult rank_jumping_parameters(const CurveMatrix& A) {
  auto Gk = semigroup_Gk(A), G0 = semigroup_G0(A);
  const int64_t k = A.k();
  RankJumpResult res;
  res.box_bound = std::max<int64_t>(0, k * (G0.frobenius() + Gk.frobenius() + k));
  const int64_t B = res.box_bound;
  // the shell (B, B+k] in either coordinate must be free of rank jumps
  for (int64_t b2 = 0; b2 <= B + k; ++b2)
    for (int64_t m = 0; m <= B + k; ++m) {
      if ((b2 + m) % k != 0) continue;
      int64_t b1 = (b2 + m) / k;
      if (!rank_jump_point(A, Gk, G0, b1, b2)) continue;
      if (b2 > B || m > B)
        fail(ErrorKind::Internal, "box-bound", "rank-jumping parameter outside the enumeration box");
      res.points.emplace_back(b1, b2);
    }
  std::sort(res.points.begin(), res.points.end());
  return res;
}

bool in_rank_jump_set(const CurveMatrix& A, const Param& beta) {
  if (!beta.is_integer()) return false;
  int64_t b1 = to_int64(beta.b1.c0), b2 = to_int64(beta.b2.c0);
  return rank_jump_point(A, semigroup_Gk(A), semigroup_G0(A), b1, b2);
}

int64_t rank(const CurveMatrix& A, const Param& beta) {
  if (!beta.is_exact()) fail(ErrorKind::Validation, "exact", "rank needs an exact parameter");
  return A.k() + (in_rank_jump_set(A, beta) ? 1 : 0);
}

Affine line_form(const CurveMatrix& A, Facet f, const Param& beta) {
  return f == Facet::Zero ? beta.b2 : beta.b1 * Q(A.k()) - beta.b2;
}

std::set<Facet> is_resonant(const CurveMatrix& A, const Param& beta) {
  if (!beta.is_exact()) fail(ErrorKind::Validation, "exact", "resonance test needs an exact parameter");
  std::set<Facet> out;
  for (Facet f : {Facet::Zero, Facet::K})
    if (line_form(A, f, beta).is_integer_constant()) out.insert(f);
  return out;
}

Param ResonantLine::at(const CurveMatrix& A, const Affine& lambda) const {
  if (facet == Facet::Zero) return {lambda, Affine(level)};
  return {lambda, lambda * Q(A.k()) - Affine(level)};
}

std::string ResonantLine::str(const CurveMatrix& A) const {
  std::ostringstream os;
  if (facet == Facet::Zero) os << "b2 = " << level.get_str();
  else os << A.k() << "*b1 - b2 = " << level.get_str();
  return os.str();
}

bool ResonantLine::operator<(const ResonantLine& o) const {
  if (facet != o.facet) return facet == Facet::Zero;
  return level < o.level;
}

bool ResonantLine::operator==(const ResonantLine& o) const { return facet == o.facet && level == o.level; }

ResonantLine make_line(const CurveMatrix& A, Facet f, const Q& level) {
  ResonantLine L;
  L.facet = f;
  L.level = level;
  L.polar = is_integer(level) && polar_level_semigroup(A, f).contains(to_int64(level));
  return L;
}

bool on_line(const CurveMatrix& A, const ResonantLine& L, const Param& beta) {
  return (line_form(A, L.facet, beta) - Affine(L.level)).is_zero();
}

namespace {

std::vector<ResonantLine> lines_in_window(const CurveMatrix& A, const Window& w, bool polar_only) {
  std::vector<ResonantLine> out;
  const int64_t k = A.k();
  for (int64_t N = w.y0; N <= w.y1; ++N) {
    auto L = make_line(A, Facet::Zero, Q(N));
    if (!polar_only || L.polar) out.push_back(L);
  }
  // k b1 - b2 over the window corners
  int64_t lo = std::min({k * w.x0 - w.y0, k * w.x0 - w.y1, k * w.x1 - w.y0, k * w.x1 - w.y1});
  int64_t hi = std::max({k * w.x0 - w.y0, k * w.x0 - w.y1, k * w.x1 - w.y0, k * w.x1 - w.y1});
  for (int64_t N = lo; N <= hi; ++N) {
    auto L = make_line(A, Facet::K, Q(N));
    if (!polar_only || L.polar) out.push_back(L);
  }
  return out;
}

}  // namespace

std::vector<ResonantLine> polar_lines(const CurveMatrix& A, const Window& w) { return lines_in_window(A, w, true); }

std::vector<ResonantLine> resonant_lines(const CurveMatrix& A, const Window& w) {
  return lines_in_window(A, w, false);
}

DeltaVerdict delta_conditions(const CurveMatrix& A, int64_t b1, int64_t b2) {
  const int64_t k = A.k();
  if (!semigroup_Gk(A).contains(b2) || !semigroup_G0(A).contains(k * b1 - b2))
    fail(ErrorKind::Domain, "not-double-polar", "parameter does not lie on two polar lines");
  // gamma = C beta with C = [[k,-1],[0,1]]; Delta = C A has columns (k - k_i, k_i)
  const int64_t g1 = k * b1 - b2, g2 = b2;
  std::vector<std::pair<int64_t, int64_t>> cols;
  for (int i = 0; i < A.n(); ++i) cols.emplace_back(k - A.exponent(i), A.exponent(i));
  // reachable points of N Delta inside [0,g1] x [0,g2]
  std::vector<std::vector<char>> reach(g1 + 1, std::vector<char>(g2 + 1, 0));
  reach[0][0] = 1;
  for (int64_t a = 0; a <= g1; ++a)
    for (int64_t b = 0; b <= g2; ++b) {
      if (reach[a][b]) continue;
      for (auto [c1, c2] : cols)
        if (c1 <= a && c2 <= b && reach[a - c1][b - c2]) {
          reach[a][b] = 1;
          break;
        }
    }
  // second (resp. first) coordinates attained by nonzero elements of N Delta
  auto coord_attained = [&](int which, int64_t d) {
    if (d < 0) return false;
    if (d == 0) return true;  // (k,0) or (0,k) is a nonzero column with that coordinate 0
    std::vector<char> r(d + 1, 0);
    r[0] = 1;
    for (int64_t s = 1; s <= d; ++s)
      for (auto c : cols) {
        int64_t p = which == 2 ? c.second : c.first;
        if (p > 0 && p <= s && r[s - p]) {
          r[s] = 1;
          break;
        }
      }
    return static_cast<bool>(r[d]);
  };
  DeltaVerdict v;
  for (int64_t b = 0; b <= g2 && !v.first; ++b)
    if (reach[g1][b] && coord_attained(2, g2 - b)) v.first = true;
  for (int64_t a = 0; a <= g1 && !v.second; ++a)
    if (reach[a][g2] && coord_attained(1, g1 - a)) v.second = true;
  return v;
}

}  // namespace curvehyp
