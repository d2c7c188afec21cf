#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace curvehyp::quad {

namespace {

// relative to the larger of the value and the integral of |g|, so cancelling integrals terminate
bool close_enough(C a, C b, double tol, double mass) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), mass) || a == b;
}

constexpr int kGL = 16;

struct GLRule {
  std::array<double, kGL> x, w;
  GLRule() {
    for (int i = 0; i < kGL; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (kGL + 0.5));
      double dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = z;
        for (int j = 2; j <= kGL; ++j) {
          double p2 = ((2 * j - 1) * z * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = kGL * (z * p1 - p0) / (z * z - 1);
        double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2 / ((1 - z * z) * dp * dp);
    }
  }
};

const GLRule& gl_rule() {
  static const GLRule r;
  return r;
}

}  // namespace

Result double_exponential(const std::function<C(double)>& g, double center, double left, double right, double tol,
                          int max_halvings) {
  Result r;
  double rate = std::max(std::min(left, right), 1e-3);
  double S = std::min(std::asinh(45.0 / rate), 12.0);
  double mass = 0;
  auto f = [&](double s) {
    r.evaluations++;
    C v = g(center + std::sinh(s)) * std::cosh(s);
    mass += std::abs(v);
    return v;
  };
  double h = 0.25;
  C sum = f(0);
  for (double s = h; s <= S; s += h) sum += f(s) + f(-s);
  C prev = sum * h;
  for (int level = 0; level < max_halvings; ++level) {
    h /= 2;
    C add = 0;
    for (double s = h; s <= S; s += 2 * h) add += f(s) + f(-s);
    sum += add;
    C cur = sum * h;
    r.error = std::abs(cur - prev);
    r.value = cur;
    if (level >= 2 && close_enough(cur, prev, tol, mass * h)) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

Result gauss_legendre(const std::function<C(double)>& g, double a, double b, double tol, int max_doublings) {
  const auto& rule = gl_rule();
  Result r;
  double mass = 0;
  auto panels = [&](int m) {
    C s = 0;
    mass = 0;
    double w = (b - a) / m;
    for (int p = 0; p < m; ++p) {
      double mid = a + (p + 0.5) * w;
      for (int i = 0; i < kGL; ++i) {
        C v = g(mid + 0.5 * w * rule.x[i]);
        s += rule.w[i] * v;
        mass += rule.w[i] * std::abs(v) * 0.5 * w;
      }
      r.evaluations += kGL;
    }
    return s * (0.5 * w);
  };
  int m = 4;
  C prev = panels(m);
  for (int d = 0; d < max_doublings; ++d) {
    m *= 2;
    C cur = panels(m);
    r.value = cur;
    r.error = std::abs(cur - prev);
    if (close_enough(cur, prev, tol, mass)) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

Result periodic_trapezoid(const std::function<C(double)>& g, double a, double period, double tol, int n0,
                          int max_doublings) {
  Result r;
  int n = n0;
  C sum = 0;
  double mass = 0;
  auto f = [&](double t) {
    C v = g(t);
    mass += std::abs(v);
    return v;
  };
  for (int j = 0; j < n; ++j) sum += f(a + period * j / n);
  r.evaluations = n;
  C prev = sum * (period / n);
  for (int d = 0; d < max_doublings; ++d) {
    C add = 0;
    for (int j = 0; j < n; ++j) add += f(a + period * (j + 0.5) / n);
    r.evaluations += n;
    sum += add;
    n *= 2;
    C cur = sum * (period / n);
    r.value = cur;
    r.error = std::abs(cur - prev);
    if (close_enough(cur, prev, tol, mass * period / n)) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

}  // namespace curvehyp::quad
