#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "curvehyp/exact.hpp"

namespace curvehyp {

// facet-0 is the face spanned by a_1 = (1,0): its lines are beta_2 = N.
// facet-k is the face spanned by a_n = (1,k): its lines are k*beta_1 - beta_2 = N.
enum class Facet { Zero, K };

std::string facet_name(Facet f);

class CurveMatrix {
 public:
  // validates: length >= 2, k_1 = 0, strictly increasing, gcd(k_2..k_n) = 1
  static CurveMatrix make(const IVec& exponents);

  int n() const { return static_cast<int>(k_.size()); }
  int64_t k() const { return k_.back(); }
  const IVec& exponents() const { return k_; }
  int64_t exponent(int i) const { return k_[i]; }  // 0-based
  std::pair<int64_t, int64_t> column(int i) const { return {1, k_[i]}; }
  int64_t volume() const { return k(); }
  // facet normals: gamma_0 = (0,-1), gamma_k = (-k,1)
  std::pair<int64_t, int64_t> normal(Facet f) const;
  std::string str() const;

  // A*v for an integer vector
  std::pair<int64_t, int64_t> degree(const IVec& v) const;

 private:
  IVec k_;
};

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<int64_t> generators);

  const std::vector<int64_t>& generators() const { return gens_; }
  const std::vector<int64_t>& gaps() const { return gaps_; }
  int64_t frobenius() const { return frobenius_; }  // -1 when there are no gaps
  bool contains(int64_t m) const;

 private:
  std::vector<int64_t> gens_;
  std::vector<int64_t> gaps_;
  int64_t frobenius_ = -1;
};

// G_0 = N{k - k_i : i < n} and G_k = N{k_2,..,k_n}, named as in the semigroup definitions.
NumericalSemigroup semigroup_G0(const CurveMatrix& A);
NumericalSemigroup semigroup_Gk(const CurveMatrix& A);
// by subscript: facet-0 -> G_0, facet-k -> G_k
NumericalSemigroup facet_semigroup(const CurveMatrix& A, Facet f);
// semigroup carrying the polar levels of the lines of facet f:
// beta_2 = N is polar iff N in G_k; k beta_1 - beta_2 = N is polar iff N in G_0
NumericalSemigroup polar_level_semigroup(const CurveMatrix& A, Facet f);

// minimal number of parts from {k_2..k_n} summing to m (-1 if impossible)
int64_t min_parts(const CurveMatrix& A, int64_t m);
bool in_NA(const CurveMatrix& A, int64_t b1, int64_t b2);

struct RankJumpResult {
  std::vector<std::pair<int64_t, int64_t>> points;  // sorted
  int64_t box_bound = 0;
};

RankJumpResult rank_jumping_parameters(const CurveMatrix& A);
bool in_rank_jump_set(const CurveMatrix& A, const Param& beta);
int64_t rank(const CurveMatrix& A, const Param& beta);

// value of the linear form defining the lines of facet f at beta: beta_2 or k beta_1 - beta_2
Affine line_form(const CurveMatrix& A, Facet f, const Param& beta);
std::set<Facet> is_resonant(const CurveMatrix& A, const Param& beta);

struct ResonantLine {
  Facet facet = Facet::Zero;
  Q level;
  bool polar = false;

  // beta(lambda): facet-0 -> (lambda, N); facet-k -> (lambda, k*lambda - N)
  Param at(const CurveMatrix& A, const Affine& lambda) const;
  std::string str(const CurveMatrix& A) const;
  bool operator<(const ResonantLine& o) const;
  bool operator==(const ResonantLine& o) const;
};

ResonantLine make_line(const CurveMatrix& A, Facet f, const Q& level);
bool on_line(const CurveMatrix& A, const ResonantLine& L, const Param& beta);

struct Window {
  int64_t x0, x1, y0, y1;  // beta_1 in [x0,x1], beta_2 in [y0,y1]
};

std::vector<ResonantLine> polar_lines(const CurveMatrix& A, const Window& w);
// resonant integer levels (polar or not) meeting the window
std::vector<ResonantLine> resonant_lines(const CurveMatrix& A, const Window& w);

struct DeltaVerdict {
  bool first = false;   // a witness pair exists for the beta_2-expansion condition
  bool second = false;  // same for the k beta_1 - beta_2 expansion
};

// throws Domain "not-double-polar" unless beta lies on two polar lines
DeltaVerdict delta_conditions(const CurveMatrix& A, int64_t b1, int64_t b2);

}  // namespace curvehyp
