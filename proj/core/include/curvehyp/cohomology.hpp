#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curvehyp/curve.hpp"
#include "curvehyp/exact.hpp"
#include "curvehyp/toric.hpp"

namespace curvehyp {

using QMatrix = std::vector<std::vector<Q>>;

int64_t matrix_rank(QMatrix m);

// alpha + m*a (+ m'*b) in NA for some shifts up to the Frobenius-based bound; the verdict is
// re-checked with one more shell and must not change
bool in_NA_plus_Z(const CurveMatrix& A, int64_t a1, int64_t a2, bool with_a1, bool with_an);

struct IshidaPiece {
  std::pair<int64_t, int64_t> alpha;
  int64_t d0 = 0, d1 = 0, d2 = 0;
  // basis monomials: NA; NA+Za_1 and NA+Za_n (in this order, when present); NA+Za_1+Za_n
  std::optional<IVec> basis0;
  std::optional<IVec> basis1_first, basis1_last;
  std::optional<IVec> basis2;
  QMatrix delta0;  // d1 x d0
  QMatrix delta1;  // d2 x d1
  int64_t h0 = 0, h1 = 0, h2 = 0;
};

std::tuple<int64_t, int64_t, int64_t> graded_dims(const CurveMatrix& A, int64_t a1, int64_t a2);
IshidaPiece ishida_piece(const CurveMatrix& A, int64_t a1, int64_t a2);

// the rank-jump box of curve-combinatorics widened by `margin`
Window cohomology_box(const CurveMatrix& A, int64_t margin = 2);
std::vector<std::pair<int64_t, int64_t>> h1_support(const CurveMatrix& A, const Window& box);

struct CocycleGenerator {
  IVec v, v_prime;
  int64_t m = 0;            // d_1^m d_n^m clears both denominators
  bool certified = false;   // normal forms agree after clearing
  std::string str() const;  // "d1^-1 d2^2 | d3^2 d4^-1" with partial signs
};

std::string monomial_str(const IVec& v);
// both monomials equal in the d_1 d_n localization of C[d]/I_A
bool equal_in_localization(const GroebnerBasis& gb, const IVec& v, const IVec& w, int64_t* shift = nullptr);

CocycleGenerator cocycle_generator(const CurveMatrix& A, int64_t a1, int64_t a2);

}  // namespace curvehyp
