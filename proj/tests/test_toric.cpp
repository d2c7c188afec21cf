#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "curvehyp/error.hpp"
#include "curvehyp/toric.hpp"

using namespace curvehyp;

namespace {

Q frac(int64_t p, int64_t q) {
  Q r(p, q);
  r.canonicalize();
  return r;
}

std::vector<IVec> monomials_of_degree(int n, int64_t d) {
  std::vector<IVec> out;
  IVec a(n, 0);
  std::function<void(int, int64_t)> rec = [&](int i, int64_t left) {
    if (i == n - 1) {
      a[i] = left;
      out.push_back(a);
      return;
    }
    for (int64_t c = 0; c <= left; ++c) {
      a[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, d);
  return out;
}

std::vector<TermOrder> all_orders(int n) {
  return {TermOrder::d1_first(n), TermOrder::dn_first(n), TermOrder::dn_then_d1(n)};
}

std::vector<std::string> pair_strings(const std::vector<StandardPair>& ps) {
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(p.str());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

IVec random_curve(std::mt19937& rng, int64_t kmax) {
  while (true) {
    int64_t k = 2 + rng() % (kmax - 1);
    int extra = rng() % std::min<int64_t>(3, k - 1);
    std::set<int64_t> s{0, k};
    while (static_cast<int>(s.size()) < extra + 2) s.insert(1 + rng() % (k - 1));
    IVec e(s.begin(), s.end());
    int64_t g = 0;
    for (size_t i = 1; i < e.size(); ++i) g = gcd64(g, e[i]);
    if (g == 1) return e;
  }
}

// monomials of a fiber are all equal mod I_A; the standard one is the order-minimum
void fiber_oracle(const CurveMatrix& A, const TermOrder& o, int64_t max_degree) {
  auto gb = toric_ideal_groebner(A, o);
  for (const auto& b : gb.elems()) {
    EXPECT_EQ(A.degree(b.lead), A.degree(b.trail));
    EXPECT_TRUE(o.less(b.trail, b.lead));
  }
  for (int64_t d = 0; d <= max_degree; ++d) {
    std::map<std::pair<int64_t, int64_t>, std::vector<IVec>> fibers;
    for (auto& a : monomials_of_degree(A.n(), d)) fibers[A.degree(a)].push_back(a);
    for (auto& [deg, mons] : fibers) {
      IVec mn = *std::min_element(mons.begin(), mons.end(), [&](const IVec& x, const IVec& y) { return o.less(x, y); });
      for (const auto& a : mons) {
        EXPECT_EQ(gb.in_initial(a), a != mn) << A.str() << " " << o.str();
        EXPECT_EQ(gb.normal_form(a), mn);
      }
    }
  }
}

}  // namespace

TEST(TermOrder, Presets) {
  EXPECT_EQ(TermOrder::d1_first(4).low_to_high(), (std::vector<int>{0, 3, 2, 1}));
  EXPECT_EQ(TermOrder::dn_first(4).low_to_high(), (std::vector<int>{3, 1, 2, 0}));
  EXPECT_EQ(TermOrder::dn_then_d1(4).low_to_high(), (std::vector<int>{3, 0, 1, 2}));
  EXPECT_EQ(TermOrder::parse("4,1,2,3", 4).low_to_high(), TermOrder::dn_then_d1(4).low_to_high());
  EXPECT_THROW(TermOrder::parse("1,1,2,3", 4), Error);
}

TEST(TermOrder, GradedReverseLex) {
  auto o = TermOrder::d1_first(3);
  EXPECT_TRUE(o.less({1, 0, 0}, {0, 0, 2}));  // degree first
  EXPECT_TRUE(o.less({1, 0, 1}, {0, 2, 0}));  // more of the lowest variable is smaller
  EXPECT_FALSE(o.less({0, 2, 0}, {0, 2, 0}));
}

TEST(Kernel, BasisOfLattice) {
  for (auto e : {IVec{0, 1, 3, 4}, IVec{0, 2, 3}, IVec{0, 2, 5, 7}, IVec{0, 1, 2, 3, 4}}) {
    auto A = CurveMatrix::make(e);
    auto K = kernel_basis(A);
    ASSERT_EQ(static_cast<int>(K.size()), A.n() - 2);
    for (const auto& v : K) EXPECT_EQ(A.degree(v), (std::make_pair<int64_t, int64_t>(0, 0)));
  }
  EXPECT_TRUE(kernel_basis(CurveMatrix::make({0, 1})).empty());
}

TEST(Groebner, TrivialCurveHasEmptyBasis) {
  EXPECT_TRUE(toric_ideal_groebner(CurveMatrix::make({0, 1}), TermOrder::d1_first(2)).elems().empty());
}

TEST(Groebner, FiberMinimalityTwistedCubicUpToSix) {
  auto A = CurveMatrix::make({0, 2, 3});
  for (const auto& o : all_orders(3)) fiber_oracle(A, o, 6);
}

TEST(Groebner, FiberMinimalityKnownCurves) {
  for (auto e : {IVec{0, 1, 3, 4}, IVec{0, 1, 4, 5}, IVec{0, 2, 5, 7}, IVec{0, 1, 2, 3}})
    for (const auto& o : all_orders(static_cast<int>(e.size()))) fiber_oracle(CurveMatrix::make(e), o, 5);
}

TEST(Groebner, FiberMinimalityRandomCurves) {
  std::mt19937 rng(11);
  for (int t = 0; t < 12; ++t) {
    auto A = CurveMatrix::make(random_curve(rng, 8));
    for (const auto& o : all_orders(A.n())) fiber_oracle(A, o, 4);
  }
}

TEST(StandardPairs, ExampleD1Lowest) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  auto ps = standard_pairs(toric_ideal_groebner(A, TermOrder::d1_first(4)).initial_ideal());
  EXPECT_EQ(pair_strings(ps), sorted({"(0,0,0,0; {1,4})", "(0,1,0,0; {1,4})", "(0,0,1,0; {1,4})",
                                      "(0,0,2,0; {1,4})", "(0,2,0,0; {1})"}));
}

TEST(StandardPairs, ExampleD4Lowest) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  auto ps = standard_pairs(toric_ideal_groebner(A, TermOrder::dn_first(4)).initial_ideal());
  EXPECT_EQ(pair_strings(ps), sorted({"(0,0,0,0; {1,4})", "(0,1,0,0; {1,4})", "(0,2,0,0; {1,4})",
                                      "(0,3,0,0; {1,4})", "(0,0,1,0; {4})", "(0,0,2,0; {4})", "(1,0,1,0; {4})"}));
}

TEST(StandardPairs, ExampleD4ThenD1) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  auto ps = standard_pairs(toric_ideal_groebner(A, TermOrder::dn_then_d1(4)).initial_ideal());
  EXPECT_EQ(pair_strings(ps), sorted({"(0,0,0,0; {1,4})", "(0,1,0,0; {1,4})", "(0,0,1,0; {1,4})",
                                      "(0,2,0,0; {1,4})", "(0,0,2,0; {4})"}));
}

TEST(StandardPairs, TrivialCurve) {
  auto ps = standard_pairs(toric_ideal_groebner(CurveMatrix::make({0, 1}), TermOrder::d1_first(2)).initial_ideal());
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].str(), "(0,0; {1,2})");
}

// the pairs cover exactly the standard monomials, k of them are top, each is maximal
TEST(StandardPairs, CoverStandardMonomials) {
  std::mt19937 rng(5);
  std::vector<IVec> curves{{0, 1, 3, 4}, {0, 2, 3}, {0, 1, 4, 5}, {0, 2, 5, 7}};
  for (int t = 0; t < 10; ++t) curves.push_back(random_curve(rng, 8));
  for (const auto& e : curves) {
    auto A = CurveMatrix::make(e);
    for (const auto& o : {TermOrder::d1_first(A.n()), TermOrder::dn_first(A.n())}) {
      auto I = toric_ideal_groebner(A, o).initial_ideal();
      auto ps = standard_pairs(I);
      int64_t tops = std::count_if(ps.begin(), ps.end(), [](const StandardPair& p) { return p.top; });
      EXPECT_EQ(tops, A.k()) << A.str();
      for (const auto& p : ps) EXPECT_TRUE(is_standard_pair(I, p));
      for (int64_t d = 0; d <= 6; ++d)
        for (const auto& a : monomials_of_degree(A.n(), d)) {
          int covers = 0;
          for (const auto& p : ps) {
            bool ok = true;
            for (int i = 0; i < A.n(); ++i) {
              bool free = std::find(p.sigma.begin(), p.sigma.end(), i) != p.sigma.end();
              if (free ? a[i] < p.r[i] : a[i] != p.r[i]) ok = false;
            }
            covers += ok;
          }
          EXPECT_EQ(covers > 0, !I.contains(a)) << A.str();
        }
    }
  }
}

TEST(FakeExponents, SymbolicTopExponent) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  auto fe = fake_exponents(A, TermOrder::d1_first(4), Param::symbolic());
  ASSERT_EQ(fe.size(), 4u);
  bool found = false;
  for (const auto& v : fe)
    if (v.source.r == IVec{0, 1, 0, 0}) {
      found = true;
      EXPECT_EQ(v.v[0], Affine(Q(-3, 4), 1, Q(-1, 4)));
      EXPECT_EQ(v.v[1], Affine(1));
      EXPECT_EQ(v.v[2], Affine(0));
      EXPECT_EQ(v.v[3], Affine(Q(-1, 4), 0, Q(1, 4)));
    }
  EXPECT_TRUE(found);
}

TEST(FakeExponents, LowerPairOnItsLine) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  auto fe = fake_exponents(A, TermOrder::d1_first(4), Param{Affine::beta1(), Affine(2)});
  ASSERT_EQ(fe.size(), 5u);
  bool found = false;
  for (const auto& v : fe)
    if (!v.source.top) {
      found = true;
      EXPECT_EQ(v.v[0], Affine(-2, 1, 0));
      EXPECT_EQ(v.v[1], Affine(2));
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(fake_exponents(A, TermOrder::d1_first(4), Param::exact(Q(1, 3), Q(1, 7))).size(), 4u);
}

TEST(FakeExponents, TrivialCurve) {
  auto A = CurveMatrix::make({0, 1});
  auto fe = fake_exponents(A, TermOrder::d1_first(2), Param::exact(5, 2));
  ASSERT_EQ(fe.size(), 1u);
  EXPECT_EQ(fe[0].v[0], Affine(3));
  EXPECT_EQ(fe[0].v[1], Affine(2));
}

TEST(FakeExponents, DegreeAndMiddleCoordinates) {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto A = CurveMatrix::make(random_curve(rng, 8));
    Param beta = Param::exact(frac(int(rng() % 17) - 8, 1 + rng() % 5), frac(int(rng() % 17) - 8, 1 + rng() % 5));
    for (const auto& o : {TermOrder::d1_first(A.n()), TermOrder::dn_first(A.n())})
      for (const auto& v : fake_exponents(A, o, beta)) {
        Param d = v.degree(A);
        EXPECT_EQ(d.b1, beta.b1);
        EXPECT_EQ(d.b2, beta.b2);
        for (int i = 1; i + 1 < A.n(); ++i) {
          EXPECT_TRUE(v.v[i].is_integer_constant());
          EXPECT_GE(v.v[i].c0, 0);
        }
      }
  }
}

TEST(SpecialLines, FourLinesThenTwo) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  auto L = special_lines(A, {TermOrder::d1_first(4), TermOrder::dn_first(4)});
  std::vector<std::string> got;
  for (const auto& l : L) got.push_back(l.str(A));
  EXPECT_EQ(got, (std::vector<std::string>{"b2 = 2", "4*b1 - b2 = 1", "4*b1 - b2 = 2", "4*b1 - b2 = 5"}));
  auto Lp = special_lines(A, {TermOrder::d1_first(4), TermOrder::dn_first(4), TermOrder::dn_then_d1(4)});
  got.clear();
  for (const auto& l : Lp) got.push_back(l.str(A));
  EXPECT_EQ(got, (std::vector<std::string>{"b2 = 2", "4*b1 - b2 = 2"}));
  for (const auto& l : Lp) EXPECT_TRUE(on_line(A, l, Param::exact(1, 2)));
}

TEST(SpecialLines, TrivialAndErrors) {
  auto A = CurveMatrix::make({0, 1});
  EXPECT_TRUE(special_lines(A, {TermOrder::d1_first(2), TermOrder::dn_first(2)}).empty());
  auto B = CurveMatrix::make({0, 1, 3, 4});
  try {
    special_lines(B, {TermOrder::parse("2,1,3,4", 4)});
    FAIL() << "expected a validation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }
}

// top fake exponents never differ by an integer vector
TEST(FakeExponents, NoIntegerDifferencesRandom) {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    auto A = CurveMatrix::make(random_curve(rng, 8));
    Param beta = Param::exact(frac(int(rng() % 21) - 10, 1 + rng() % 6), frac(int(rng() % 21) - 10, 1 + rng() % 6));
    auto fe = fake_exponents(A, TermOrder::d1_first(A.n()), beta);
    for (size_t a = 0; a < fe.size(); ++a)
      for (size_t b = a + 1; b < fe.size(); ++b) {
        if (!fe[a].source.top || !fe[b].source.top) continue;
        bool integral = true;
        for (int i = 0; i < A.n(); ++i) integral = integral && is_integer((fe[a].v[i] - fe[b].v[i]).c0);
        EXPECT_FALSE(integral) << A.str();
      }
  }
}
