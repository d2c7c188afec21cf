#pragma once

#include <string>
#include <vector>

#include "curvehyp/curve.hpp"
#include "curvehyp/exact.hpp"

namespace curvehyp {

// graded reverse lexicographic order; low_to_high lists 0-based variable indices,
// smallest variable first
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::vector<int> low_to_high, std::string name);

  // d_1 < d_n < d_{n-1} < ... < d_2
  static TermOrder d1_first(int n);
  // d_n < d_2 < d_3 < ... < d_{n-1} < d_1
  static TermOrder dn_first(int n);
  // d_n < d_1 < d_2 < ... < d_{n-1}
  static TermOrder dn_then_d1(int n);
  // parse "4,1,2,3" (1-based, lowest first)
  static TermOrder parse(const std::string& text, int n);

  bool less(const IVec& a, const IVec& b) const;
  int lowest() const { return low_[0]; }
  const std::vector<int>& low_to_high() const { return low_; }
  const std::string& name() const { return name_; }
  std::string str() const;

 private:
  std::vector<int> low_;
  std::string name_;
};

struct Binomial {
  IVec lead, trail;  // lead > trail, disjoint supports

  IVec u() const;
  int64_t degree() const;
};

class MonomialIdeal {
 public:
  MonomialIdeal(int n, std::vector<IVec> gens);  // minimalizes the generator list
  int n() const { return n_; }
  const std::vector<IVec>& gens() const { return gens_; }
  bool contains(const IVec& a) const;

 private:
  int n_;
  std::vector<IVec> gens_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(TermOrder order, std::vector<Binomial> elems, int n)
      : order_(std::move(order)), elems_(std::move(elems)), n_(n) {}

  const TermOrder& order() const { return order_; }
  const std::vector<Binomial>& elems() const { return elems_; }
  IVec normal_form(IVec a) const;
  bool in_initial(const IVec& a) const;
  MonomialIdeal initial_ideal() const;
  int64_t max_degree() const;

 private:
  TermOrder order_;
  std::vector<Binomial> elems_;
  int n_;
};

bool divides(const IVec& a, const IVec& b);  // a | b
IVec lcm(const IVec& a, const IVec& b);

// Z-basis of ker_Z(A), n-2 vectors
std::vector<IVec> kernel_basis(const CurveMatrix& A);

// reduced Groebner basis of I_A; degree_bound defaults to 2k^2 and only guards the result
GroebnerBasis toric_ideal_groebner(const CurveMatrix& A, const TermOrder& order, int64_t degree_bound = 0);

struct StandardPair {
  IVec r;
  std::vector<int> sigma;  // sorted, 0-based
  bool top = false;

  bool operator<(const StandardPair& o) const;
  bool operator==(const StandardPair& o) const { return r == o.r && sigma == o.sigma; }
  std::string str() const;  // 1-based sigma
};

// all standard pairs of I; throws Validation "sigma-pattern" unless every sigma is
// {1,n}, {1} or {n}
std::vector<StandardPair> standard_pairs(const MonomialIdeal& I);
// the three defining conditions, checked directly
bool is_standard_pair(const MonomialIdeal& I, const StandardPair& p);

struct FakeExponent {
  std::vector<Affine> v;
  StandardPair source;

  Param degree(const CurveMatrix& A) const;
  std::string str() const;
};

std::vector<FakeExponent> fake_exponents(const CurveMatrix& A, const std::vector<StandardPair>& pairs,
                                         const Param& beta);
std::vector<FakeExponent> fake_exponents(const CurveMatrix& A, const TermOrder& order, const Param& beta);

// lines on which a non-top pair of the order yields a fake exponent
std::vector<ResonantLine> order_special_lines(const CurveMatrix& A, const TermOrder& order);
// union over facets of the intersection over the supplied orders whose lowest variable
// matches the facet (d_1 for beta_2 = N lines, d_n for k beta_1 - beta_2 = N lines)
std::vector<ResonantLine> special_lines(const CurveMatrix& A, const std::vector<TermOrder>& orders);

}  // namespace curvehyp
