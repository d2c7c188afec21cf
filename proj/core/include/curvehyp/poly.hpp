#pragma once

#include <string>
#include <vector>

#include "curvehyp/exact.hpp"

namespace curvehyp {

// univariate polynomial in lambda with rational coefficients, low degree first
class Poly {
 public:
  Poly() = default;
  Poly(const Q& c);  // NOLINT: constants convert implicitly
  explicit Poly(std::vector<Q> coeffs);
  static Poly lambda();
  // lambda - a
  static Poly linear_root(const Q& a);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Q(0); }
  Q lead() const { return c_.empty() ? Q(0) : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Q& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division; divisor nonzero
  void divmod(const Poly& d, Poly& quot, Poly& rem) const;
  Poly monic() const;
  Poly derivative() const;
  Q eval(const Q& x) const;
  // multiplicity of x as a root (0 when p(x) != 0); p nonzero
  int root_order(const Q& x) const;
  std::string str(const char* var = "l") const;

 private:
  void trim();
  std::vector<Q> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic (zero if both zero)

// reduced fraction num/den with monic denominator
class RatFunc {
 public:
  RatFunc() : num_(), den_(Q(1)) {}
  RatFunc(const Q& c) : num_(c), den_(Q(1)) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Q(1)) {}  // NOLINT
  RatFunc(const Poly& n, const Poly& d);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc derivative() const;
  // throws Domain "pole" when den(x) == 0
  Q eval(const Q& x) const;
  std::string str(const char* var = "l") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace curvehyp
