#include <cmath>

#include "curvehyp/analytic.hpp"

namespace curvehyp {

namespace {

// Lanczos approximation, g = 7, nine terms
constexpr double kG = 7.0;
constexpr double kP[9] = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                          771.32342877765313,      -176.61502916214059,   12.507343278686905,
                          -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

C lanczos(C z) {  // Gamma(z) for Re z >= 1/2
  z -= 1.0;
  C s = kP[0];
  for (int i = 1; i < 9; ++i) s += kP[i] / (z + double(i));
  C t = z + kG + 0.5;
  return std::sqrt(2 * M_PI) * std::exp((z + 0.5) * std::log(t) - t) * s;
}

}  // namespace

C gamma(C z) {
  if (z.real() < 0.5) return M_PI / (std::sin(M_PI * z) * lanczos(1.0 - z));
  return lanczos(z);
}

C rgamma(C z) {
  if (z.real() < 0.5) return std::sin(M_PI * z) * lanczos(1.0 - z) / M_PI;
  return 1.0 / lanczos(z);
}

C closed_form_n2(const CVec& x, C b1, C b2) {
  return std::exp((b1 - b2) * std::log(x[0]) + b2 * std::log(x[1])) * gamma(-b2) * gamma(b2 - b1) * rgamma(-b1);
}

}  // namespace curvehyp
