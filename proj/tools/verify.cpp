#include <algorithm>
#include <cmath>
#include <random>

#include "curvehyp/error.hpp"
#include "report.hpp"

namespace curvehyp::report {

namespace {

struct Check {
  std::string name;
  double residual = 0;
  bool converged = true;
};

double rel(C a, C b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

std::pair<C, C> beta_or(const VerifyOptions& o, C b1, C b2) {
  if (!o.beta) return {b1, b2};
  return {C(to_double(o.beta->first), 0), C(to_double(o.beta->second), 0)};
}

bool is_int(C z) { return z.imag() == 0 && z.real() == std::round(z.real()); }

void resem(const CurveMatrix& A, const VerifyOptions& o, std::vector<Check>& out) {
  auto [b1, b2] = beta_or(o, -2, -3);
  if (!in_domain(A, b1, b2))
    fail(ErrorKind::Validation, "domain", "resem needs beta in the convergence domain");
  Anchor anchor = is_int(b1) ? Anchor::Zero : Anchor::Infinity;
  for (uint64_t s = o.seed; s < o.seed + 3; ++s) {
    CVec x = sample_in_V(A, s);
    auto R = roots_and_components(A, x);
    for (int i = 0; i < R.size(); ++i) {
      auto Mi = euler_mellin(A, x, R.theta(i), b1, b2, {}, anchor);
      auto Mj = euler_mellin(A, x, R.theta(i + 1), b1, b2, {}, anchor);
      C res = residue_integral(A, x, R, i, b1, b2);
      double scale = std::max({std::abs(Mi.value), std::abs(Mj.value), std::abs(res)});
      out.push_back({"resem/seed=" + std::to_string(s) + "/root=" + std::to_string(i + 1),
                     rel(res, Mi.value - Mj.value, scale), Mi.converged && Mj.converged});
    }
  }
}

void closed_form(const VerifyOptions&, std::vector<Check>& out) {
  auto A = CurveMatrix::make({0, 1});
  CVec x{1.7, 0.6};
  auto R = roots_and_components(A, x);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      C b2(-0.4 - 0.5 * a, 0.15 * a);
      C b1 = b2 - C(0.35 + 0.5 * b, -0.1 * b);
      auto M = euler_mellin(A, x, R.theta(0), b1, b2);
      C ref = closed_form_n2(x, b1, b2);
      out.push_back({"closed-form-n2/grid=" + std::to_string(a) + "," + std::to_string(b),
                     rel(M.value, ref, std::abs(ref)), M.converged});
    }
}

int64_t first_polar_level(const CurveMatrix& A, Facet f) {
  auto S = polar_level_semigroup(A, f);
  int64_t N = 1;
  while (!S.contains(N)) ++N;
  return N;
}

void polar_match(const CurveMatrix& A, const VerifyOptions& o, std::vector<Check>& out) {
  const int64_t level = o.level ? *o.level : first_polar_level(A, o.facet);
  std::vector<C> lambdas{C(0.3, 0.2), C(0.37, 0), C(-0.61, 0.45)};
  std::vector<CVec> xs;
  for (uint64_t s = o.seed; s < o.seed + 3; ++s) xs.push_back(sample_in_V(A, s));
  auto m = polar_line_match_check(A, o.facet, level, lambdas, xs);
  std::string tag = "polar-match/" + facet_name(o.facet) + "/N=" + std::to_string(level);
  out.push_back({tag + "/series", m.max_deviation, m.converged});
  out.push_back({tag + "/spread", m.component_spread, m.converged});
}

void homogeneity(const CurveMatrix& A, const VerifyOptions& o, std::vector<Check>& out) {
  auto [b1, b2] = beta_or(o, C(-1.3, 0.2), C(-0.7, -0.1));
  if (!in_domain(A, b1, b2))
    fail(ErrorKind::Validation, "domain", "homogeneity needs beta in the convergence domain");
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  for (uint64_t s = o.seed; s < o.seed + 3; ++s) {
    CVec x = sample_in_V(A, s);
    double sc = U(rng), t = U(rng);
    CVec y = x;
    for (int i = 0; i < A.n(); ++i) y[i] *= sc * std::pow(t, double(A.exponent(i)));
    auto R = roots_and_components(A, x);
    for (int i = 0; i < R.size(); ++i) {
      auto Mx = euler_mellin(A, x, R.theta(i), b1, b2);
      auto My = euler_mellin(A, y, R.theta(i), b1, b2);
      C expect = std::exp(b1 * std::log(sc) + b2 * std::log(t)) * Mx.value;
      out.push_back({"homogeneity/seed=" + std::to_string(s) + "/component=" + std::to_string(i + 1),
                     rel(My.value, expect, std::abs(expect)), Mx.converged && My.converged});
    }
  }
}

void extension_order(const CurveMatrix& A, const VerifyOptions& o, std::vector<Check>& out) {
  auto [b1, b2] = beta_or(o, C(0.37, 0.1), C(1.6, -0.2));
  for (uint64_t s = o.seed; s < o.seed + 3; ++s) {
    CVec x = sample_in_V(A, s);
    auto R = roots_and_components(A, x);
    for (int i = 0; i < R.size(); ++i) {
      auto e0 = extended_euler_mellin(A, x, R.theta(i), b1, b2, FacetOrder::Facet0First);
      auto ek = extended_euler_mellin(A, x, R.theta(i), b1, b2, FacetOrder::FacetKFirst);
      out.push_back({"extension-order/seed=" + std::to_string(s) + "/component=" + std::to_string(i + 1),
                     rel(e0.value, ek.value, std::abs(e0.value)), e0.converged && ek.converged});
    }
  }
}

void residue_vanishing(const CurveMatrix& A, const VerifyOptions& o, std::vector<Check>& out) {
  const C lam(0.3, 0.2);
  const int64_t N = first_polar_level(A, Facet::Zero);
  for (uint64_t s = o.seed; s < o.seed + 3; ++s) {
    CVec x = sample_in_V(A, s);
    auto R = roots_and_components(A, x);
    std::vector<C> vals;
    bool conv = true;
    double scale = 0;
    for (int i = 0; i < R.size(); ++i) {
      auto e = regularized_ratio(A, x, R.theta(i), Facet::Zero, N, lam);
      conv = conv && e.converged;
      vals.push_back(e.value);
      scale = std::max(scale, std::abs(e.value));
    }
    for (int i = 0; i < R.size(); ++i)
      out.push_back({"residue-vanishing/polar/seed=" + std::to_string(s) + "/root=" + std::to_string(i + 1),
                     rel(vals[i], vals[(i + 1) % R.size()], scale), conv});

    // nonpolar resonant levels: N = -1 and the gaps
    double rmin = 1e300, rmax = 0;
    for (C r : R.roots) {
      rmin = std::min(rmin, std::abs(r));
      rmax = std::max(rmax, std::abs(r));
    }
    const C b1(0.4, 0.3);
    std::vector<int64_t> lv0{-1}, lvk{-1};
    const auto Gk = semigroup_Gk(A), G0 = semigroup_G0(A);
    lv0.insert(lv0.end(), Gk.gaps().begin(), Gk.gaps().end());
    lvk.insert(lvk.end(), G0.gaps().begin(), G0.gaps().end());
    for (auto L : lv0) {
      C r0 = residue_at_zero(A, x, b1, L);
      double sc = std::max(1.0, std::abs(std::exp(b1 * std::log(x[0]))) * std::pow(rmin, -double(L)));
      out.push_back({"residue-vanishing/zero/seed=" + std::to_string(s) + "/N=" + std::to_string(L),
                     std::abs(r0) / sc, true});
    }
    for (auto L : lvk) {
      C b2 = double(A.k()) * b1 - double(L);
      C ri = residue_at_infinity(A, x, b1, b2);
      double sc = std::max(1.0, std::abs(std::exp(b1 * std::log(x.back()))) * std::pow(rmax, double(L)));
      out.push_back({"residue-vanishing/infinity/seed=" + std::to_string(s) + "/N=" + std::to_string(L),
                     std::abs(ri) / sc, true});
    }
  }
}

}  // namespace

std::vector<std::string> verify_suites() {
  return {"resem", "closed-form-n2", "polar-match", "homogeneity", "extension-order", "residue-vanishing", "all"};
}

Outcome verify(const CurveMatrix& A, const VerifyOptions& o) {
  auto suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    fail(ErrorKind::Validation, "suite", "unknown suite '" + o.suite + "'");
  std::vector<Check> checks;
  auto want = [&](const char* s) { return o.suite == "all" || o.suite == s; };
  if (want("resem")) resem(A, o, checks);
  if (want("closed-form-n2")) closed_form(o, checks);
  if (want("polar-match")) polar_match(A, o, checks);
  if (want("homogeneity")) homogeneity(A, o, checks);
  if (want("extension-order")) extension_order(A, o, checks);
  if (want("residue-vanishing")) residue_vanishing(A, o, checks);
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });

  Json doc = envelope("verify", A);
  Json list = Json::array();
  bool pass = true, conv = true;
  for (const auto& c : checks) {
    bool ok = c.converged && c.residual <= o.tol;
    pass = pass && ok;
    conv = conv && c.converged;
    list.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", o.tol}, {"pass", ok},
                    {"converged", c.converged}});
  }
  doc["payload"] = {{"suite", o.suite}, {"seed", o.seed}, {"tolerance", o.tol}, {"checks", list}, {"pass", pass}};
  return {doc, !conv ? NonConvergence : (pass ? Ok : CheckFailed)};
}

}  // namespace curvehyp::report
