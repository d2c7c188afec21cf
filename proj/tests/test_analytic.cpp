#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "curvehyp/analytic.hpp"
#include "curvehyp/error.hpp"

using namespace curvehyp;

namespace {

double rel(C a, C b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

const CurveMatrix& A0134() {
  static const CurveMatrix A = CurveMatrix::make({0, 1, 3, 4});
  return A;
}

}  // namespace

TEST(Gamma, RealAxisMatchesStd) {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.25, 20.0, -0.5, -1.5, -3.7}) {
    EXPECT_LT(rel(gamma(C(x, 0)), C(std::tgamma(x), 0)), 1e-13) << x;
  }
}

TEST(Gamma, ReflectionAndRecurrence) {
  const double pi = std::acos(-1.0);
  for (C z : {C(0.3, 0.7), C(-2.2, 1.1), C(4.5, -3.0), C(0.01, -0.2)}) {
    EXPECT_LT(rel(gamma(z) * gamma(1.0 - z), pi / std::sin(pi * z)), 1e-12);
    EXPECT_LT(rel(gamma(z + 1.0), z * gamma(z)), 1e-12);
    EXPECT_LT(rel(rgamma(z) * gamma(z), C(1, 0)), 1e-12);
  }
  // |d(1/Gamma)/dz| = m! at -m, so allow for a rounding-size offset in z
  double fact = 1;
  for (int m = 0; m <= 5; ++m) {
    if (m > 0) fact *= m;
    EXPECT_LT(std::abs(rgamma(C(-m, 0))), 1e-14 * fact);
  }
}

TEST(Roots, ResidualsAndOrdering) {
  for (uint64_t seed : {1, 2, 3, 4}) {
    CVec x = sample_in_V(A0134(), seed);
    EXPECT_TRUE(in_V(A0134(), x));
    auto R = roots_and_components(A0134(), x);
    ASSERT_EQ(R.size(), 4);
    EXPECT_FALSE(R.singular);
    EXPECT_LT(R.residual, 1e-12);
    for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(evaluate_f(A0134(), x, R.roots[i])) / std::abs(x[0]), 1e-10);
    for (int i = 1; i < 4; ++i) EXPECT_LE(R.args[i - 1], R.args[i]);
  }
}

TEST(Roots, RepeatedRootIsFlagged) {
  auto A = CurveMatrix::make({0, 1, 2});
  auto R = roots_and_components(A, {C(1), C(-2), C(1)});
  EXPECT_TRUE(R.singular);
}

TEST(EulerMellin, ClosedFormForTwoColumns) {
  auto A = CurveMatrix::make({0, 1});
  CVec x{C(1.7, 0), C(0.6, 0)};
  auto R = roots_and_components(A, x);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      C b1(-3.6 + 0.6 * i, 0.25 * (j - 2)), b2(-0.2 - 0.15 * i - 0.1 * j, 0.2);
      if (!in_domain(A, b1, b2, 0.1)) continue;
      auto e = euler_mellin(A, x, R.theta(0), b1, b2);
      EXPECT_TRUE(e.converged);
      EXPECT_LT(rel(e.value, closed_form_n2(x, b1, b2)), 1e-9) << b1 << " " << b2;
    }
}

TEST(EulerMellin, OutsideDomainThrows) {
  CVec x = sample_in_V(A0134(), 1);
  auto R = roots_and_components(A0134(), x);
  EXPECT_THROW(euler_mellin(A0134(), x, R.theta(0), C(1, 0), C(0.5, 0)), Error);
}

// x_i -> s t^{k_i} x_i scales M by s^b1 t^b2
TEST(EulerMellin, TorusHomogeneity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  C b1(-1.3, 0.2), b2(-0.7, -0.1);
  for (uint64_t seed : {1, 2, 3}) {
    CVec x = sample_in_V(A0134(), seed);
    auto R = roots_and_components(A0134(), x);
    double s = U(rng), t = U(rng);
    CVec y = x;
    for (int i = 0; i < 4; ++i) y[i] *= s * std::pow(t, static_cast<double>(A0134().exponent(i)));
    for (int c = 0; c < 4; ++c) {
      C m = euler_mellin(A0134(), x, R.theta(c), b1, b2).value;
      C my = euler_mellin(A0134(), y, R.theta(c), b1, b2).value;
      EXPECT_LT(rel(my, std::pow(C(s), b1) * std::pow(C(t), b2) * m), 1e-8);
    }
  }
}

TEST(EulerMellin, ExtensionOrderIndependence) {
  for (uint64_t seed : {1, 2, 3}) {
    CVec x = sample_in_V(A0134(), seed);
    auto R = roots_and_components(A0134(), x);
    for (auto [b1, b2] : std::vector<std::pair<C, C>>{{C(0.37, 0.1), C(1.6, -0.2)}, {C(1.2, -0.3), C(-0.4, 0.1)}}) {
      for (int c = 0; c < 4; ++c) {
        auto e0 = extended_euler_mellin(A0134(), x, R.theta(c), b1, b2, FacetOrder::Facet0First);
        auto ek = extended_euler_mellin(A0134(), x, R.theta(c), b1, b2, FacetOrder::FacetKFirst);
        EXPECT_LT(rel(e0.value, ek.value), 1e-8);
      }
    }
  }
}

TEST(EulerMellin, ExtensionAgreesInsideDomain) {
  CVec x = sample_in_V(A0134(), 2);
  auto R = roots_and_components(A0134(), x);
  C b1(-1.1, 0.05), b2(-0.6, 0);
  auto direct = euler_mellin(A0134(), x, R.theta(1), b1, b2);
  auto shift = extension_shift(A0134(), x, b1, b2, Facet::Zero,
                               [&](C c1, C c2) { return euler_mellin(A0134(), x, R.theta(1), c1, c2).value; });
  EXPECT_LT(rel(shift, direct.value), 1e-8);
}

TEST(Residues, DifferenceOfAdjacentComponents) {
  for (uint64_t seed : {1, 2, 3}) {
    CVec x = sample_in_V(A0134(), seed);
    auto R = roots_and_components(A0134(), x);
    for (int i = 0; i < 4; ++i) {
      C d = euler_mellin(A0134(), x, R.theta(i), -2.0, -3.0).value -
            euler_mellin(A0134(), x, R.theta(i + 1), -2.0, -3.0).value;
      EXPECT_LT(rel(residue_integral(A0134(), x, R, i, -2.0, -3.0), d), 1e-8);
    }
    C b1(-1.3, 0.1), b2(-0.7, 0);
    for (int i = 0; i < 4; ++i) {
      C d = euler_mellin(A0134(), x, R.theta(i), b1, b2, {}, Anchor::Infinity).value -
            euler_mellin(A0134(), x, R.theta(i + 1), b1, b2, {}, Anchor::Infinity).value;
      EXPECT_LT(std::abs(residue_integral(A0134(), x, R, i, b1, b2) - d) /
                    std::abs(euler_mellin(A0134(), x, R.theta(i), b1, b2, {}, Anchor::Infinity).value),
                1e-8);
    }
  }
}

TEST(Residues, SumOverAllPolesVanishes) {
  for (uint64_t seed : {1, 2}) {
    CVec x = sample_in_V(A0134(), seed);
    auto R = roots_and_components(A0134(), x);
    C s = residue_at_zero(A0134(), x, -2.0, -3) + residue_at_infinity(A0134(), x, -2.0, -3.0);
    double scale = std::abs(residue_at_zero(A0134(), x, -2.0, -3));
    for (int i = 0; i < 4; ++i) {
      C r = residue_integral(A0134(), x, R, i, -2.0, -3.0);
      s += r;
      scale = std::max(scale, std::abs(r));
    }
    EXPECT_LT(std::abs(s), 1e-9 * scale);
  }
}

TEST(Residues, ResidueAtZeroVanishesOnGapLevels) {
  auto B = CurveMatrix::make({0, 2, 3});
  for (uint64_t seed : {1, 2, 3}) {
    CVec x = sample_in_V(B, seed);
    double s = std::max(1.0, std::abs(std::pow(x[0], C(0.4, 0.3))) / std::pow(std::abs(x[2] / x[0]), -1.0 / 3));
    EXPECT_LT(std::abs(residue_at_zero(B, x, C(0.4, 0.3), 1)), 1e-10 * s);
    EXPECT_GT(std::abs(residue_at_zero(B, x, C(0.4, 0.3), 2)), 1e-6);
  }
}

TEST(PolarMatch, BothFacetsLowLevels) {
  for (uint64_t seed : {1, 2}) {
    CVec x = sample_in_V(A0134(), seed);
    for (Facet f : {Facet::Zero, Facet::K})
      for (int64_t N = 0; N <= 3; ++N) {
        auto m = polar_line_match_check(A0134(), f, N, {C(0.3, 0.2), C(-0.61, 0.45)}, {x});
        EXPECT_TRUE(m.converged);
        EXPECT_LT(m.max_deviation, 1e-9) << facet_name(f) << " N=" << N;
        EXPECT_LT(m.component_spread, 1e-9);
        EXPECT_EQ(m.values.size(), 2u * 4u);
      }
  }
}

TEST(PolarMatch, PerturbedFamilyIsRejected) {
  CVec x = sample_in_V(A0134(), 1);
  auto fam = polar_line_family(A0134(), Facet::Zero, 4);
  ASSERT_GE(fam.terms.size(), 2u);
  // perturb the term that dominates at x
  size_t big = 0;
  double best = -1;
  for (size_t t = 0; t < fam.terms.size(); ++t) {
    FiniteSeries one = fam;
    one.terms = {fam.terms[t]};
    double v = std::abs(evaluate_series(one, x, C(0.3, 0.2)));
    if (v > best) best = v, big = t;
  }
  fam.terms[big].coef = fam.terms[big].coef * RatFunc(Q(11, 10));
  auto m = polar_line_match_check(A0134(), fam, {C(0.3, 0.2)}, {x});
  EXPECT_GT(m.max_deviation, 1e-4);
  // the components still agree with each other
  EXPECT_LT(m.component_spread, 1e-9);
}

TEST(PolarMatch, OtherCurves) {
  for (auto e : {IVec{0, 2, 3}, IVec{0, 1, 4, 5}, IVec{0, 2, 5, 7}}) {
    auto A = CurveMatrix::make(e);
    CVec x = sample_in_V(A, 4);
    for (Facet f : {Facet::Zero, Facet::K})
      for (int64_t N = 0; N <= 4; ++N) {
        if (!polar_level_semigroup(A, f).contains(N)) continue;
        auto m = polar_line_match_check(A, f, N, {C(0.37, 0)}, {x});
        EXPECT_LT(m.max_deviation, 1e-8) << A.str() << " " << facet_name(f) << " N=" << N;
      }
  }
}

TEST(Probe, FullRankOffTheLinesAndRankOneOnThem) {
  for (uint64_t seed : {1, 2, 3}) {
    CVec x = sample_in_V(A0134(), seed);
    auto p = em_independence_probe(A0134(), C(-1.3, 0), C(-0.7, 0), x, seed);
    EXPECT_TRUE(p.converged);
    EXPECT_GT(p.min_singular, 1e-6);
    auto q = em_independence_probe(A0134(), C(0.3, 0.2), C(1, 0), x, seed);
    ASSERT_EQ(q.singular_values.size(), 4u);
    EXPECT_LT(q.min_singular, 1e-10);
    // one nonzero singular value: the regularized ratios are the same series on every component
    EXPECT_LT(q.singular_values[1] / q.singular_values[0], 1e-10);
  }
  auto T = CurveMatrix::make({0, 1});
  CVec x{C(1.3), C(0.7)};
  EXPECT_GT(em_independence_probe(T, C(-1.3, 0), C(-0.7, 0), x, 1).min_singular, 0.5);
}
