#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "curvehyp/analytic.hpp"
#include "curvehyp/curve.hpp"
#include "curvehyp/exact.hpp"
#include "curvehyp/toric.hpp"

namespace curvehyp::report {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

inline constexpr const char* kSchema = "curvehyp.report/1";
inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { Ok = 0, CheckFailed = 1, ValidationError = 2, NonConvergence = 3 };

struct Outcome {
  Json doc;
  int exit_code = Ok;
};

// ---- parsing ----
IVec parse_exponents(const std::string& text);
std::pair<Q, Q> parse_beta(const std::string& text);
Window parse_window(const std::string& text);
// names: d1-first, dn-first, dn-then-d1, both, or a 1-based list such as 4,1,2,3
std::vector<TermOrder> parse_orders(const std::vector<std::string>& names, int n);
double default_tolerance();  // CURVEHYP_TOL or 1e-6

// ---- serialization helpers ----
Json q_json(const Q& q);
Json complex_json(C z);
Json line_json(const CurveMatrix& A, const ResonantLine& L);
Json semigroup_json(const NumericalSemigroup& S);
Json envelope(const std::string& command, const CurveMatrix& A);
std::string dump(const Json& j);  // 2-space indent, trailing newline

// ---- commands ----
Window default_window(const CurveMatrix& A);
Outcome analyze(const CurveMatrix& A, const Window& w, const std::vector<TermOrder>& orders);
Outcome solve(const CurveMatrix& A, const Q& b1, const Q& b2, int64_t bound);
Outcome cohomology(const CurveMatrix& A, std::optional<Window> box);

struct VerifyOptions {
  std::string suite = "all";  // resem | closed-form-n2 | polar-match | homogeneity | extension-order | residue-vanishing | all
  double tol = 1e-6;
  uint64_t seed = 1;
  std::optional<int64_t> level;  // polar-match -N; default: smallest positive polar level
  Facet facet = Facet::Zero;  // polar-match facet
  std::optional<std::pair<Q, Q>> beta;
};

std::vector<std::string> verify_suites();
Outcome verify(const CurveMatrix& A, const VerifyOptions& opt);

}  // namespace curvehyp::report
