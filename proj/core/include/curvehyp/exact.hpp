#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace curvehyp {

using Q = mpq_class;
using Z = mpz_class;

using IVec = std::vector<int64_t>;

Q parse_rational(const std::string& text);
std::string to_string(const Q& q);
bool is_integer(const Q& q);
int64_t to_int64(const Q& q);
Z floor_q(const Q& q);
double to_double(const Q& q);

int64_t gcd64(int64_t a, int64_t b);

// c0 + c1*b1 + c2*b2 over Q; the two symbols are beta_1 and beta_2 (beta_1 doubles as
// the line parameter lambda on resonant lines)
struct Affine {
  Q c0, c1, c2;

  Affine() = default;
  Affine(Q a, Q b = 0, Q c = 0) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}
  static Affine beta1() { return Affine(0, 1, 0); }
  static Affine beta2() { return Affine(0, 0, 1); }

  bool is_constant() const { return c1 == 0 && c2 == 0; }
  bool is_zero() const { return c0 == 0 && is_constant(); }
  // true when the form is an integer for every value of the symbols (only if constant)
  bool is_integer_constant() const { return is_constant() && is_integer(c0); }

  Affine operator+(const Affine& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Affine operator-(const Affine& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Affine operator-() const { return {-c0, -c1, -c2}; }
  Affine operator*(const Q& s) const { return {c0 * s, c1 * s, c2 * s}; }
  Affine operator/(const Q& s) const { return {c0 / s, c1 / s, c2 / s}; }
  bool operator==(const Affine& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
  bool operator<(const Affine& o) const;

  Q eval(const Q& b1, const Q& b2) const { return c0 + c1 * b1 + c2 * b2; }
  // substitute b1 := x.b1-form, b2 := y-form
  Affine substitute(const Affine& b1, const Affine& b2) const;

  std::string str(const char* s1 = "b1", const char* s2 = "b2") const;
};

// a parameter point: exact numbers or affine forms in the formal symbols
struct Param {
  Affine b1, b2;

  static Param exact(const Q& x, const Q& y) { return {Affine(x), Affine(y)}; }
  static Param symbolic() { return {Affine::beta1(), Affine::beta2()}; }
  bool is_exact() const { return b1.is_constant() && b2.is_constant(); }
  bool is_integer() const { return b1.is_integer_constant() && b2.is_integer_constant(); }
  std::string str() const;
};

}  // namespace curvehyp
