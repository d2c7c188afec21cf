#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "curvehyp/curve.hpp"
#include "curvehyp/series.hpp"

namespace curvehyp {

using C = std::complex<double>;
using CVec = std::vector<C>;

// ---- special functions ----

C gamma(C z);
C rgamma(C z);  // 1/Gamma, entire
// n = 2 oracle: x1^(b1-b2) x2^b2 Gamma(-b2) Gamma(b2-b1) / Gamma(-b1), principal powers
C closed_form_n2(const CVec& x, C b1, C b2);

// ---- roots and coamoeba components ----

bool in_V(const CurveMatrix& A, const CVec& x, double ratio = 0.05);

struct RootSystem {
  CVec roots;                 // sorted by argument in (-pi, pi]
  std::vector<double> args;
  // Theta_i = (lo_i, hi_i): Theta_1 = (arg rho_k - 2 pi, arg rho_1), Theta_i = (arg rho_{i-1}, arg rho_i)
  std::vector<std::pair<double, double>> arcs;
  bool singular = false;      // repeated root up to the near-singularity threshold
  double residual = 0;        // max |f(rho)| / scale

  int size() const { return static_cast<int>(roots.size()); }
  double theta(int i) const;  // midpoint of Theta_i (0-based); i = size() gives theta_0 + 2 pi
};

RootSystem roots_and_components(const CurveMatrix& A, const CVec& x);
C evaluate_f(const CurveMatrix& A, const CVec& x, C z);

// ---- Euler-Mellin integrals ----

// Zero: log f -> Log x_1 as z -> 0 along the ray; Infinity: log f - k log z -> Log x_n as z -> infinity
enum class Anchor { Zero, Infinity };
std::string anchor_name(Anchor a);

enum class FacetOrder { Facet0First, FacetKFirst };
std::string facet_order_name(FacetOrder o);

struct QuadConfig {
  double tol = 1e-11;
  int max_halvings = 12;
  double margin = 0.3;  // distance kept from the boundary of the convergence domain
};

struct EMEvaluation {
  C value;
  double theta = 0;
  C b1, b2;
  Anchor anchor = Anchor::Zero;
  double error = 0;
  bool converged = true;
  std::string method;  // direct-ray | extension-shifted | regularized | closed-form
  int quadratures = 0;
};

bool in_domain(const CurveMatrix& A, C b1, C b2, double margin = 0);

// ray integral of f(z)^b1 z^-b2 dz/z along arg z = theta; beta must lie in the domain
EMEvaluation euler_mellin(const CurveMatrix& A, const CVec& x, double theta, C b1, C b2, const QuadConfig& cfg = {},
                          Anchor anchor = Anchor::Zero);

// one application of the facet's extension formula; M evaluates at shifted parameters
C extension_shift(const CurveMatrix& A, const CVec& x, C b1, C b2, Facet f, const std::function<C(C, C)>& M);

// meromorphic extension by memoized shifts into the domain
EMEvaluation extended_euler_mellin(const CurveMatrix& A, const CVec& x, double theta, C b1, C b2,
                                   FacetOrder order = FacetOrder::Facet0First, const QuadConfig& cfg = {},
                                   Anchor anchor = Anchor::Zero);

// lim of M / Gamma(-(form)) as the line form tends to N, at beta = line(lambda)
EMEvaluation regularized_ratio(const CurveMatrix& A, const CVec& x, double theta, Facet f, int64_t N, C lambda,
                               FacetOrder order = FacetOrder::Facet0First, const QuadConfig& cfg = {});
// the anchor that makes the ratio a principal-branch Laurent polynomial on the facet
Anchor polar_anchor(Facet f);
// R = kappa_N(lambda) * family, with family the unstripped polar line series
C polar_kappa(int64_t N, C lambda);
// principal-branch evaluation of a finite series at complex lambda
C evaluate_series(const FiniteSeries& s, const CVec& x, C lambda);

// ---- residues ----

// integral of f^b1 z^-b2 dz/z around root i (0-based), equal to M^{Theta_i} - M^{Theta_{i+1}}:
// a circle for integer b1 (any anchor); otherwise a keyhole from 0 that matches the
// infinity-anchored M, and beta must lie in the domain
C residue_integral(const CurveMatrix& A, const CVec& x, const RootSystem& R, int i, C b1, C b2,
                   const QuadConfig& cfg = {});
// ccw loop around 0; needs b2 integer
C residue_at_zero(const CurveMatrix& A, const CVec& x, C b1, int64_t b2, int nodes = 256);
// clockwise loop around infinity; needs k b1 - b2 integer
C residue_at_infinity(const CurveMatrix& A, const CVec& x, C b1, C b2, int nodes = 256);

// ---- cross-checks ----

struct MatchReport {
  double max_deviation = 0;         // against kappa * family
  double component_spread = 0;      // between components
  bool converged = true;
  std::vector<C> values;            // per sample and component
};

// compares the regularized ratio on every component with kappa * family
MatchReport polar_line_match_check(const CurveMatrix& A, const FiniteSeries& family, const std::vector<C>& lambdas,
                                   const std::vector<CVec>& xs, const QuadConfig& cfg = {});
MatchReport polar_line_match_check(const CurveMatrix& A, Facet f, int64_t N, const std::vector<C>& lambdas,
                                   const std::vector<CVec>& xs, const QuadConfig& cfg = {});

// seeded in-V point with middle coefficients of size ~ratio
CVec sample_in_V(const CurveMatrix& A, uint64_t seed, double ratio = 0.02);

struct ProbeReport {
  double min_singular = 0;  // of the row-normalized k x k matrix, relative to the largest
  std::vector<double> singular_values;
  bool converged = true;
};

// rows: k samples x with perturbed middle coefficients; columns: components of the base point.
// polar lines use the regularized ratio instead of M.
ProbeReport em_independence_probe(const CurveMatrix& A, C b1, C b2, const CVec& x, uint64_t seed,
                                  const QuadConfig& cfg = {});

}  // namespace curvehyp
