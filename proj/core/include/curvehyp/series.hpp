#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvehyp/curve.hpp"
#include "curvehyp/exact.hpp"
#include "curvehyp/poly.hpp"
#include "curvehyp/toric.hpp"

namespace curvehyp {

// ---- B-matrix ----

struct BColumn {
  int i = 0;  // 0-based middle column
  int64_t b1 = 0, bii = 0, bn = 0;
  IVec kernel_vector(int n) const;  // -b1 e_1 + bii e_i - bn e_n
};

std::vector<BColumn> b_matrix(const CurveMatrix& A);
// whether the columns of B span ker_Z(A) (gcd of maximal minors is 1)
bool b_spans_kernel(const CurveMatrix& A);
// l_i = u_i / b_ii for the middle coordinates
std::vector<Q> b_coordinates(const CurveMatrix& A, const IVec& u);

// ---- ordered partitions ----

struct OrderedPartition {
  std::vector<int64_t> parts;    // in order
  IVec multiplicity;             // indexed like the part set
  std::vector<int64_t> partial;  // s_1..s_len
  size_t length() const { return parts.size(); }
};

std::vector<OrderedPartition> ordered_partitions(const std::vector<int64_t>& parts, int64_t N);

// ---- finitely supported series in lambda ----

// exponents are affine in lambda (the beta1 slot of Affine); coefficients lie in Q(lambda)
struct LTerm {
  std::vector<Affine> exp;
  RatFunc coef;
};

struct FiniteSeries {
  Facet facet = Facet::Zero;
  Q level;
  std::vector<LTerm> terms;  // sorted by exponent
  Poly removed = Poly(Q(1));  // monic factor divided out
  Q scale = 1;                // stripped = original / (removed * scale)
  std::optional<Q> at;        // set once lambda is specialized

  Param parameter(const CurveMatrix& A) const;
  FiniteSeries evaluate(const Q& lambda) const;
  FiniteSeries unstripped() const;
  std::vector<std::vector<Q>> exact_support() const;  // requires a specialized series
  std::string str() const;
};

// sum over the monomials of the polar line; unstripped coefficients
FiniteSeries polar_line_family(const CurveMatrix& A, Facet f, int64_t N);
// stripped of the common polynomial factor and normalized (lex-first coefficient monic)
FiniteSeries polar_line_solution(const CurveMatrix& A, Facet f, int64_t N);

// exact exponent vectors are equal up to a common nonzero scalar multiple
bool proportional(const FiniteSeries& a, const FiniteSeries& b);

enum class Coincidence { IndependentPair, SingleSeries };

struct CoincidenceResult {
  Coincidence verdict;
  FiniteSeries first;   // from the beta_2 = N line
  FiniteSeries second;  // from the k beta_1 - beta_2 = N line
};

CoincidenceResult coincidence_at_intersection(const CurveMatrix& A, const Q& b1, const Q& b2);

// ---- canonical series ----

// scalar * prod(num) / prod(den); factors are affine in beta
struct Coef {
  Q scalar = 1;
  std::vector<Affine> num, den;

  bool is_exact() const { return num.empty() && den.empty(); }
  Q value() const;
  std::string str() const;
};

struct SeriesTerm {
  IVec u;
  Coef coef;
};

enum class SeriesMode {
  Literal,    // index set u_i + r_i >= 0 on the middle coordinates only
  Restricted  // additionally keeps the negative support of integer coordinates fixed
};

struct TruncatedSeries {
  FakeExponent base;
  Param beta;
  int64_t bound = 0;
  SeriesMode mode = SeriesMode::Literal;
  std::vector<SeriesTerm> terms;  // u = 0 first

  std::vector<Affine> exponent(const IVec& u) const;
  const SeriesTerm* find(const IVec& u) const;
};

int64_t default_bound(const CurveMatrix& A);

// throws Domain "zero-denominator" in literal mode when a denominator vanishes
TruncatedSeries canonical_series(const CurveMatrix& A, const FakeExponent& v, const Param& beta, int64_t bound,
                                 SeriesMode mode = SeriesMode::Literal);

// coordinates of v that are negative integers (0-based)
std::vector<int> negative_support(const std::vector<Affine>& v);
// no v + u (u in the kernel) has strictly smaller negative support; v exact
bool has_minimal_negative_support(const CurveMatrix& A, const std::vector<Affine>& v);

// ---- annihilation ----

struct Verdict {
  bool pass = true;
  std::string failure;  // first failing operator and term
  size_t excused = 0;   // residual terms attributable to truncation
};

Verdict annihilation_check(const FiniteSeries& s, const CurveMatrix& A);
Verdict annihilation_check(const FiniteSeries& s, const CurveMatrix& A, const Param& beta);
Verdict annihilation_check(const TruncatedSeries& s, const CurveMatrix& A);

// ---- parametric derivative ----

struct DerivativeResult {
  FiniteSeries series;  // specialized at lambda-bar
  bool zero = false;    // q is below the vanishing order of every coefficient
  int vanishing_order = 0;
};

// throws Domain "pole" or Domain "log-terms" (some coefficient vanishes to order < q)
DerivativeResult parametric_derivative(const FiniteSeries& family, const Q& lambda_bar, int q);

// ---- solution bases ----

enum class Deformability { Nonresonant, ResonantLine, AlongFacet0Only, AlongFacetKOnly, AlongBoth };
std::string deformability_name(Deformability d);

struct Solution {
  Deformability tag;
  std::optional<FiniteSeries> finite;
  std::optional<TruncatedSeries> series;
  Verdict annihilation;

  std::vector<Affine> leading_exponent() const;
};

struct SolutionBasis {
  Param beta;
  int64_t rank = 0;
  std::string order;  // term order used for the series part
  std::vector<Solution> solutions;
  bool independent = false;  // certified by exponent classes or disjoint supports
};

SolutionBasis solution_basis_at_point(const CurveMatrix& A, const Q& b1, const Q& b2, int64_t bound = 0);

}  // namespace curvehyp
