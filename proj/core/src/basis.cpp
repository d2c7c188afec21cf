#include <algorithm>
#include <set>
#include <tuple>

#include "curvehyp/error.hpp"
#include "curvehyp/series.hpp"

namespace curvehyp {

std::string deformability_name(Deformability d) {
  switch (d) {
    case Deformability::Nonresonant: return "nonresonant";
    case Deformability::ResonantLine: return "resonant-line";
    case Deformability::AlongFacet0Only: return "along-facet-0-only";
    case Deformability::AlongFacetKOnly: return "along-facet-k-only";
    case Deformability::AlongBoth: return "along-both";
  }
  return "?";
}

std::vector<Affine> Solution::leading_exponent() const {
  if (finite) return finite->terms.front().exp;
  return series->base.v;
}

namespace {

std::vector<std::vector<Q>> support(const Solution& s) {
  if (s.finite) return s.finite->exact_support();
  std::vector<std::vector<Q>> out;
  for (const auto& t : s.series->terms) {
    std::vector<Q> e;
    for (const auto& a : s.series->exponent(t.u)) e.push_back(a.c0);
    out.push_back(e);
  }
  return out;
}

bool independent_pair(const Solution& a, const Solution& b) {
  auto ea = a.leading_exponent(), eb = b.leading_exponent();
  for (size_t i = 0; i < ea.size(); ++i)
    if (!is_integer(ea[i].c0 - eb[i].c0)) return true;
  auto sa = support(a), sb = support(b);
  std::set<std::vector<Q>> s(sa.begin(), sa.end());
  for (const auto& e : sb)
    if (s.count(e)) return false;
  return true;
}

std::vector<StandardPair> pairs_for(const CurveMatrix& A, const TermOrder& o) {
  return standard_pairs(toric_ideal_groebner(A, o).initial_ideal());
}

}  // namespace

SolutionBasis solution_basis_at_point(const CurveMatrix& A, const Q& b1, const Q& b2, int64_t bound) {
  if (bound <= 0) bound = default_bound(A);
  const int n = A.n();
  SolutionBasis B;
  B.beta = Param::exact(b1, b2);
  B.rank = rank(A, B.beta);
  auto resonance = is_resonant(A, B.beta);

  auto add_series = [&](const FakeExponent& fe, SeriesMode mode, Deformability tag) {
    Solution s;
    s.tag = tag;
    s.series = canonical_series(A, fe, B.beta, bound, mode);
    s.annihilation = annihilation_check(*s.series, A);
    B.solutions.push_back(std::move(s));
  };

  if (in_rank_jump_set(A, B.beta)) {
    int64_t N0 = to_int64(b2), Nk = to_int64(Q(A.k()) * b1 - b2);
    for (auto [f, N, tag] : {std::tuple{Facet::Zero, N0, Deformability::AlongFacet0Only},
                             std::tuple{Facet::K, Nk, Deformability::AlongFacetKOnly}}) {
      Solution s;
      s.tag = tag;
      s.finite = polar_line_solution(A, f, N).evaluate(b1);
      s.annihilation = annihilation_check(*s.finite, A);
      B.solutions.push_back(std::move(s));
    }
    TermOrder o = TermOrder::d1_first(n);
    B.order = o.name();
    for (const auto& fe : fake_exponents(A, pairs_for(A, o), B.beta)) {
      if (!fe.source.top || is_integer(fe.v[0].c0) || is_integer(fe.v[n - 1].c0)) continue;
      add_series(fe, SeriesMode::Literal, Deformability::AlongBoth);
    }
  } else if (resonance.empty()) {
    TermOrder o = TermOrder::d1_first(n);
    B.order = o.name();
    for (const auto& fe : fake_exponents(A, pairs_for(A, o), B.beta))
      if (fe.source.top) add_series(fe, SeriesMode::Literal, Deformability::Nonresonant);
  } else {
    std::vector<TermOrder> orders{TermOrder::d1_first(n), TermOrder::dn_first(n)};
    if (!is_integer(b2)) std::swap(orders[0], orders[1]);
    bool done = false;
    for (const auto& o : orders) {
      std::vector<FakeExponent> keep;
      for (const auto& fe : fake_exponents(A, pairs_for(A, o), B.beta))
        if (has_minimal_negative_support(A, fe.v)) keep.push_back(fe);
      if (static_cast<int64_t>(keep.size()) != B.rank) continue;
      B.order = o.name();
      for (const auto& fe : keep) add_series(fe, SeriesMode::Restricted, Deformability::ResonantLine);
      done = true;
      break;
    }
    if (!done) fail(ErrorKind::Internal, "basis", "no term order gives " + std::to_string(B.rank) + " exponents");
  }
  if (static_cast<int64_t>(B.solutions.size()) != B.rank)
    fail(ErrorKind::Internal, "basis", "solution count differs from the rank");
  B.independent = true;
  for (size_t i = 0; i < B.solutions.size(); ++i)
    for (size_t j = i + 1; j < B.solutions.size(); ++j)
      B.independent = B.independent && independent_pair(B.solutions[i], B.solutions[j]);
  return B;
}

}  // namespace curvehyp
