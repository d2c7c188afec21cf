#include "curvehyp/exact.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "curvehyp/error.hpp"

namespace curvehyp {

Q parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail(ErrorKind::Validation, "rational", "empty rational literal");
  auto valid_int = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  size_t slash = t.find('/');
  size_t dot = t.find('.');
  if (slash != std::string::npos) {
    std::string p = t.substr(0, slash), q = t.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q)) fail(ErrorKind::Validation, "rational", "bad rational literal '" + text + "'");
    Z den(strip_plus(q));
    if (den == 0) fail(ErrorKind::Validation, "rational", "zero denominator in '" + text + "'");
    Q r(Z(strip_plus(p)), den);
    r.canonicalize();
    return r;
  }
  if (dot != std::string::npos) {
    // decimal literal, read exactly
    std::string body = t;
    bool neg = false;
    if (body[0] == '-' || body[0] == '+') {
      neg = body[0] == '-';
      body = body.substr(1);
    }
    size_t d = body.find('.');
    std::string digits = body.substr(0, d) + body.substr(d + 1);
    if (digits.empty() || !valid_int(digits) || digits[0] == '-' || digits[0] == '+')
      fail(ErrorKind::Validation, "rational", "bad decimal literal '" + text + "'");
    Z num(digits);
    Z den = 1;
    for (size_t i = d + 1; i < body.size(); ++i) den *= 10;
    Q r(neg ? Z(-num) : num, den);
    r.canonicalize();
    return r;
  }
  if (!valid_int(t)) fail(ErrorKind::Validation, "rational", "bad integer literal '" + text + "'");
  return Q(Z(strip_plus(t)));
}

std::string to_string(const Q& q) { return q.get_str(); }

bool is_integer(const Q& q) { return q.get_den() == 1; }

int64_t to_int64(const Q& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    fail(ErrorKind::Internal, "int64", "value " + q.get_str() + " is not a machine integer");
  return q.get_num().get_si();
}

Z floor_q(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

double to_double(const Q& q) { return q.get_d(); }

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

bool Affine::operator<(const Affine& o) const {
  if (c0 != o.c0) return c0 < o.c0;
  if (c1 != o.c1) return c1 < o.c1;
  return c2 < o.c2;
}

Affine Affine::substitute(const Affine& b1, const Affine& b2) const {
  return Affine(c0) + b1 * c1 + b2 * c2;
}

std::string Affine::str(const char* s1, const char* s2) const {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const Q& c, const char* sym) {
    if (c == 0) return;
    Q a = abs(c);
    if (any) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (a != 1) os << a.get_str() << "*";
    os << sym;
    any = true;
  };
  term(c1, s1);
  term(c2, s2);
  if (c0 != 0 || !any) {
    if (any) os << (c0 < 0 ? " - " : " + ") << Q(abs(c0)).get_str();
    else os << c0.get_str();
  }
  return os.str();
}

std::string Param::str() const { return "(" + b1.str() + ", " + b2.str() + ")"; }

}  // namespace curvehyp
