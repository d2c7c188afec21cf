#include "curvehyp/poly.hpp"

#include <sstream>

#include "curvehyp/error.hpp"

namespace curvehyp {

Poly::Poly(const Q& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::lambda() { return Poly(std::vector<Q>{Q(0), Q(1)}); }

Poly Poly::linear_root(const Q& a) { return Poly(std::vector<Q>{Q(-a), Q(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Q> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Q> r(c_);
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Q> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Q& s) const {
  std::vector<Q> r(c_);
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

void Poly::divmod(const Poly& d, Poly& quot, Poly& rem) const {
  if (d.is_zero()) fail(ErrorKind::Internal, "poly-div", "polynomial division by zero");
  std::vector<Q> r(c_);
  int dd = d.degree();
  std::vector<Q> q(std::max(0, degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    Q f = r[i] / d.lead();
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  quot = Poly(std::move(q));
  rem = Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Q(1) / lead());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Q> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(r));
}

Q Poly::eval(const Q& x) const {
  Q acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::root_order(const Q& x) const {
  int ord = 0;
  Poly p = *this;
  Poly lin = linear_root(x), q, r;
  while (!p.is_zero() && p.eval(x) == 0) {
    p.divmod(lin, q, r);
    p = q;
    ++ord;
  }
  return ord;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Q& c = c_[i];
    if (c == 0) continue;
    Q a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b, q, r;
  while (!y.is_zero()) {
    x.divmod(y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

RatFunc::RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) {
  if (d.is_zero()) fail(ErrorKind::Domain, "pole", "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Q(1));
    return;
  }
  Poly g = gcd(num_, den_), q, r;
  if (g.degree() > 0) {
    num_.divmod(g, q, r);
    num_ = q;
    den_.divmod(g, q, r);
    den_ = q;
  }
  Q l = den_.lead();
  num_ = num_ * (Q(1) / l);
  den_ = den_ * (Q(1) / l);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(ErrorKind::Domain, "pole", "division by the zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Q RatFunc::eval(const Q& x) const {
  Q d = den_.eval(x);
  if (d == 0) fail(ErrorKind::Domain, "pole", "rational function has a pole at " + x.get_str());
  return num_.eval(x) / d;
}

std::string RatFunc::str(const char* var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace curvehyp
