#include "curvehyp/toric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "curvehyp/error.hpp"

namespace curvehyp {

namespace {

int64_t total(const IVec& a) { return std::accumulate(a.begin(), a.end(), int64_t{0}); }

IVec add(IVec a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IVec sub(IVec a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool coprime(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// returns false when u == 0
bool orient(const IVec& u, const TermOrder& order, Binomial& out) {
  IVec pos(u.size(), 0), neg(u.size(), 0);
  bool nz = false;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) pos[i] = u[i];
    if (u[i] < 0) neg[i] = -u[i];
    nz = nz || u[i] != 0;
  }
  if (!nz) return false;
  if (order.less(pos, neg)) std::swap(pos, neg);
  out = Binomial{pos, neg};
  return true;
}

IVec reduce_with(const std::vector<Binomial>& G, IVec a) {
  for (bool again = true; again;) {
    again = false;
    for (const auto& g : G) {
      if (divides(g.lead, a)) {
        a = add(sub(std::move(a), g.lead), g.trail);
        again = true;
        break;
      }
    }
  }
  return a;
}

std::vector<Binomial> buchberger(std::vector<IVec> gens, const TermOrder& order) {
  std::vector<Binomial> G;
  for (const auto& u : gens) {
    Binomial b;
    if (orient(u, order, b)) G.push_back(b);
  }
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t j = 1; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(G[i].lead, G[j].lead)) continue;
    IVec m = lcm(G[i].lead, G[j].lead);
    IVec s1 = reduce_with(G, add(sub(m, G[i].lead), G[i].trail));
    IVec s2 = reduce_with(G, add(sub(m, G[j].lead), G[j].trail));
    Binomial h;
    if (!orient(sub(s1, s2), order, h)) continue;
    G.push_back(h);
    for (size_t p = 0; p + 1 < G.size(); ++p) pairs.emplace_back(p, G.size() - 1);
  }
  return G;
}

std::vector<Binomial> reduce_basis(std::vector<Binomial> G, const TermOrder& order) {
  std::vector<Binomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].lead, G[i].lead)) continue;
      redundant = G[j].lead != G[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (auto& g : minimal) {
    IVec t = reduce_with(minimal, g.trail);
    Binomial r;
    if (!orient(sub(g.lead, t), order, r) || r.lead != g.lead)
      fail(ErrorKind::Internal, "groebner", "reduction changed a leading term");
    g = r;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
    return order.less(a.lead, b.lead);
  });
  return minimal;
}

std::vector<IVec> gb_vectors(const std::vector<Binomial>& G) {
  std::vector<IVec> out;
  for (const auto& g : G) out.push_back(g.u());
  return out;
}

}  // namespace

TermOrder::TermOrder(std::vector<int> low_to_high, std::string name)
    : low_(std::move(low_to_high)), name_(std::move(name)) {
  std::vector<int> s = low_;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) fail(ErrorKind::Validation, "order", "term order is not a permutation");
  if (s.empty()) fail(ErrorKind::Validation, "order", "empty term order");
}

TermOrder TermOrder::d1_first(int n) {
  std::vector<int> v{0};
  for (int i = n - 1; i >= 1; --i) v.push_back(i);
  return TermOrder(v, "d1-first");
}

TermOrder TermOrder::dn_first(int n) {
  std::vector<int> v{n - 1};
  for (int i = 1; i < n - 1; ++i) v.push_back(i);
  v.push_back(0);
  return TermOrder(v, "dn-first");
}

TermOrder TermOrder::dn_then_d1(int n) {
  std::vector<int> v{n - 1};
  for (int i = 0; i < n - 1; ++i) v.push_back(i);
  return TermOrder(v, "dn-then-d1");
}

TermOrder TermOrder::parse(const std::string& text, int n) {
  if (text == "d1-first") return d1_first(n);
  if (text == "dn-first") return dn_first(n);
  if (text == "dn-then-d1") return dn_then_d1(n);
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x - 1);
    } catch (const std::exception&) {
      fail(ErrorKind::Validation, "order", "cannot parse term order '" + text + "'");
    }
  }
  if (static_cast<int>(v.size()) != n) fail(ErrorKind::Validation, "order", "term order has wrong length");
  return TermOrder(v, text);
}

bool TermOrder::less(const IVec& a, const IVec& b) const {
  int64_t da = total(a), db = total(b);
  if (da != db) return da < db;
  for (int v : low_)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

std::string TermOrder::str() const {
  std::string s;
  for (size_t i = 0; i < low_.size(); ++i) s += (i ? " < d" : "d") + std::to_string(low_[i] + 1);
  return s;
}

IVec Binomial::u() const { return sub(lead, trail); }
int64_t Binomial::degree() const { return total(lead); }

bool divides(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IVec lcm(const IVec& a, const IVec& b) {
  IVec m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<IVec> gens) : n_(n) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = i != j && divides(gens[j], gens[i]);
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const IVec& a) const {
  for (const auto& g : gens_)
    if (divides(g, a)) return true;
  return false;
}

IVec GroebnerBasis::normal_form(IVec a) const { return reduce_with(elems_, std::move(a)); }

bool GroebnerBasis::in_initial(const IVec& a) const {
  for (const auto& g : elems_)
    if (divides(g.lead, a)) return true;
  return false;
}

MonomialIdeal GroebnerBasis::initial_ideal() const {
  std::vector<IVec> leads;
  for (const auto& g : elems_) leads.push_back(g.lead);
  return MonomialIdeal(n_, leads);
}

int64_t GroebnerBasis::max_degree() const {
  int64_t d = 0;
  for (const auto& g : elems_) d = std::max(d, g.degree());
  return d;
}

std::vector<IVec> kernel_basis(const CurveMatrix& A) {
  const int n = A.n();
  std::vector<IVec> M(2, IVec(n));
  std::vector<IVec> U(n, IVec(n, 0));  // columns of U track the operations
  for (int j = 0; j < n; ++j) {
    M[0][j] = 1;
    M[1][j] = A.exponent(j);
    U[j][j] = 1;
  }
  auto col_axpy = [&](int dst, int src, int64_t q) {  // col_dst -= q col_src
    for (auto& row : M) row[dst] -= q * row[src];
    for (auto& row : U) row[dst] -= q * row[src];
  };
  auto col_swap = [&](int a, int b) {
    for (auto& row : M) std::swap(row[a], row[b]);
    for (auto& row : U) std::swap(row[a], row[b]);
  };
  for (int r = 0; r < 2; ++r) {
    for (int j = r + 1; j < n; ++j) {
      while (M[r][j] != 0) {
        col_axpy(r, j, M[r][r] / M[r][j]);
        col_swap(r, j);
      }
    }
    if (std::abs(M[r][r]) != 1) fail(ErrorKind::Internal, "kernel", "matrix is not unimodular");
  }
  std::vector<IVec> basis;
  for (int j = 2; j < n; ++j) {
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = U[i][j];
    basis.push_back(v);
  }
  return basis;
}

GroebnerBasis toric_ideal_groebner(const CurveMatrix& A, const TermOrder& order, int64_t degree_bound) {
  const int n = A.n();
  if (degree_bound <= 0) degree_bound = 2 * A.k() * A.k() + 2;
  // lattice ideal of the kernel basis, saturated one variable at a time: a revlex basis
  // with x_i lowest has x_i-free leading terms once x_i is divided out, and dividing out
  // common factors of the two monomials is exactly what orient() does
  std::vector<IVec> gens = kernel_basis(A);
  for (int i = 0; i < n; ++i) {
    std::vector<int> low{i};
    for (int j = 0; j < n; ++j)
      if (j != i) low.push_back(j);
    gens = gb_vectors(buchberger(gens, TermOrder(low, "sat")));
  }
  std::vector<Binomial> G = reduce_basis(buchberger(gens, order), order);
  for (const auto& g : G) {
    if (g.degree() > degree_bound) fail(ErrorKind::Internal, "groebner", "basis degree exceeds bound");
    auto [d1, d2] = A.degree(g.u());
    if (d1 != 0 || d2 != 0) fail(ErrorKind::Internal, "groebner", "element outside the kernel");
  }
  return GroebnerBasis(order, std::move(G), n);
}

bool StandardPair::operator<(const StandardPair& o) const {
  if (sigma != o.sigma) return sigma.size() != o.sigma.size() ? sigma.size() > o.sigma.size() : sigma < o.sigma;
  int64_t a = total(r), b = total(o.r);
  if (a != b) return a < b;
  return r > o.r;
}

std::string StandardPair::str() const {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  s += "; {";
  for (size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i] + 1);
  return s + "})";
}

namespace {

// no generator divides x^r restricted to the coordinates outside the mask
bool admissible(const MonomialIdeal& I, const IVec& r, const std::vector<bool>& in_sigma) {
  for (const auto& g : I.gens()) {
    bool div = true;
    for (int j = 0; j < I.n() && div; ++j)
      if (!in_sigma[j] && g[j] > r[j]) div = false;
    if (div) return false;
  }
  return true;
}

bool maximal(const MonomialIdeal& I, const IVec& r, std::vector<bool> in_sigma) {
  for (int l = 0; l < I.n(); ++l) {
    if (in_sigma[l]) continue;
    in_sigma[l] = true;
    bool adm = admissible(I, r, in_sigma);
    in_sigma[l] = false;
    if (adm) return false;
  }
  return true;
}

}  // namespace

bool is_standard_pair(const MonomialIdeal& I, const StandardPair& p) {
  std::vector<bool> in_sigma(I.n(), false);
  for (int s : p.sigma) in_sigma[s] = true;
  for (int j = 0; j < I.n(); ++j)
    if (p.r[j] < 0 || (in_sigma[j] && p.r[j] != 0)) return false;
  return admissible(I, p.r, in_sigma) && maximal(I, p.r, in_sigma);
}

std::vector<StandardPair> standard_pairs(const MonomialIdeal& I) {
  const int n = I.n();
  IVec cap(n, 0);
  for (const auto& g : I.gens())
    for (int j = 0; j < n; ++j) cap[j] = std::max(cap[j], g[j]);
  std::vector<StandardPair> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> in_sigma(n);
    std::vector<int> sigma, free;
    for (int j = 0; j < n; ++j) {
      in_sigma[j] = (mask >> j) & 1u;
      (in_sigma[j] ? sigma : free).push_back(j);
    }
    IVec r(n, 0);
    // depth-first over the free coordinates; admissibility only shrinks as r grows
    std::function<void(size_t)> dfs = [&](size_t d) {
      if (d == free.size()) {
        if (maximal(I, r, in_sigma)) out.push_back({r, sigma, false});
        return;
      }
      int j = free[d];
      for (r[j] = 0; r[j] < std::max<int64_t>(cap[j], 1); ++r[j]) {
        if (!admissible(I, r, in_sigma)) break;
        dfs(d + 1);
      }
      r[j] = 0;
    };
    if (admissible(I, r, in_sigma)) dfs(0);
  }
  for (auto& p : out) {
    bool top = p.sigma == std::vector<int>{0, n - 1};
    bool ok = top || p.sigma == std::vector<int>{0} || p.sigma == std::vector<int>{n - 1};
    if (!ok) fail(ErrorKind::Validation, "sigma-pattern", "standard pair " + p.str() + " has an unsupported sigma");
    p.top = top;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Param FakeExponent::degree(const CurveMatrix& A) const {
  Param p{Affine(0), Affine(0)};
  for (int i = 0; i < A.n(); ++i) {
    p.b1 = p.b1 + v[i];
    p.b2 = p.b2 + v[i] * Q(A.exponent(i));
  }
  return p;
}

std::string FakeExponent::str() const {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::vector<FakeExponent> fake_exponents(const CurveMatrix& A, const std::vector<StandardPair>& pairs,
                                         const Param& beta) {
  const int n = A.n();
  const Q k(A.k());
  std::vector<FakeExponent> out;
  for (const auto& p : pairs) {
    std::vector<Affine> v(n);
    for (int i = 0; i < n; ++i) v[i] = Affine(Q(p.r[i]));
    Q mid_sum = 0, mid_deg = 0;
    if (p.top) {
      for (int i = 1; i < n - 1; ++i) {
        mid_sum += p.r[i];
        mid_deg += Q(p.r[i] * A.exponent(i));
      }
      v[n - 1] = (beta.b2 - Affine(mid_deg)) / k;
      v[0] = beta.b1 - Affine(mid_sum) - v[n - 1];
    } else if (p.sigma.front() == 0) {
      for (int i = 1; i < n; ++i) {
        mid_sum += p.r[i];
        mid_deg += Q(p.r[i] * A.exponent(i));
      }
      if (!(beta.b2 - Affine(mid_deg)).is_zero()) continue;
      v[0] = beta.b1 - Affine(mid_sum);
    } else {
      Q level = 0;
      for (int i = 0; i < n - 1; ++i) {
        mid_sum += p.r[i];
        level += Q(p.r[i] * (A.k() - A.exponent(i)));
      }
      if (!(beta.b1 * k - beta.b2 - Affine(level)).is_zero()) continue;
      v[n - 1] = beta.b1 - Affine(mid_sum);
    }
    out.push_back({v, p});
  }
  return out;
}

std::vector<FakeExponent> fake_exponents(const CurveMatrix& A, const TermOrder& order, const Param& beta) {
  auto gb = toric_ideal_groebner(A, order);
  return fake_exponents(A, standard_pairs(gb.initial_ideal()), beta);
}

std::vector<ResonantLine> order_special_lines(const CurveMatrix& A, const TermOrder& order) {
  auto pairs = standard_pairs(toric_ideal_groebner(A, order).initial_ideal());
  std::set<ResonantLine> lines;
  for (const auto& p : pairs) {
    if (p.top) continue;
    Q level = 0;
    if (p.sigma.front() == 0) {
      for (int i = 1; i < A.n(); ++i) level += Q(p.r[i] * A.exponent(i));
      lines.insert(make_line(A, Facet::Zero, level));
    } else {
      for (int i = 0; i < A.n() - 1; ++i) level += Q(p.r[i] * (A.k() - A.exponent(i)));
      lines.insert(make_line(A, Facet::K, level));
    }
  }
  return {lines.begin(), lines.end()};
}

std::vector<ResonantLine> special_lines(const CurveMatrix& A, const std::vector<TermOrder>& orders) {
  std::map<Facet, std::set<ResonantLine>> per_facet;
  std::map<Facet, bool> seen;
  for (const auto& o : orders) {
    Facet f;
    if (o.lowest() == 0) f = Facet::Zero;
    else if (o.lowest() == A.n() - 1) f = Facet::K;
    else fail(ErrorKind::Validation, "order", "special lines need d_1 or d_n lowest, got " + o.str());
    std::set<ResonantLine> mine;
    for (const auto& L : order_special_lines(A, o))
      if (L.facet == f) mine.insert(L);
      else fail(ErrorKind::Internal, "special-lines", "order produced a line of the other facet");
    if (!seen[f]) {
      per_facet[f] = mine;
      seen[f] = true;
    } else {
      std::set<ResonantLine> keep;
      std::set_intersection(per_facet[f].begin(), per_facet[f].end(), mine.begin(), mine.end(),
                            std::inserter(keep, keep.begin()));
      per_facet[f] = keep;
    }
  }
  std::vector<ResonantLine> out;
  for (auto& [f, s] : per_facet) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace curvehyp
