#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "curvehyp/error.hpp"
#include "figure.hpp"
#include "report.hpp"

using namespace curvehyp;
namespace rp = curvehyp::report;

namespace {

struct Common {
  std::string matrix;
  std::string beta;
  std::vector<std::string> orders{"both"};
  std::string window;
  std::string format = "json";
  std::string output;
  double tol = 0;
  int64_t bound = 0;
  uint64_t seed = 1;
};

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    return rp::ValidationError;
  }
  f << text;
  return 0;
}

int error_exit(const Error& e) {
  rp::Json doc{{"schema", rp::kSchema}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
  switch (e.kind()) {
    case ErrorKind::Validation: doc["error"]["kind"] = "validation"; break;
    case ErrorKind::Domain: doc["error"]["kind"] = "domain"; break;
    case ErrorKind::NonConvergence: doc["error"]["kind"] = "non-convergence"; break;
    case ErrorKind::Internal: doc["error"]["kind"] = "internal"; break;
  }
  std::cout << rp::dump(doc);
  std::cerr << "error: " << e.what() << "\n";
  if (e.kind() == ErrorKind::NonConvergence) return rp::NonConvergence;
  if (e.kind() == ErrorKind::Internal) return rp::CheckFailed;
  return rp::ValidationError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvehyp: hypergeometric systems of projective monomial curves"};
  app.require_subcommand(1);
  Common c;
  std::string suite = "all", style = "both", facet = "0";
  int64_t level = -1;

  auto matrix_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("-A,--matrix", c.matrix, "exponents 0,k_2,..,k");
    if (required) o->required();
  };
  auto* analyze = app.add_subcommand("analyze", "arrangements, semigroups, rank jumps, special lines");
  matrix_opt(analyze, true);
  analyze->add_option("--window", c.window, "x0,x1,y0,y1");
  analyze->add_option("--order", c.orders, "d1-first | dn-first | dn-then-d1 | both | 1-based list");
  analyze->add_option("--format", c.format)->check(CLI::IsMember({"json"}));
  analyze->add_option("-o,--output", c.output);

  auto* solve = app.add_subcommand("solve", "solution basis at an exact parameter");
  matrix_opt(solve, true);
  solve->add_option("-b,--beta", c.beta, "b1,b2 with p/q entries")->required();
  solve->add_option("--bound", c.bound, "truncation bound (0: 4k)");
  solve->add_option("--format", c.format)->check(CLI::IsMember({"json"}));
  solve->add_option("-o,--output", c.output);

  auto* verify = app.add_subcommand("verify", "numeric cross-checks of the Euler-Mellin engine");
  matrix_opt(verify, false);
  verify->add_option("--suite", suite)->check(CLI::IsMember(rp::verify_suites()));
  verify->add_option("--tol", c.tol, "relative tolerance (default CURVEHYP_TOL or 1e-6)");
  verify->add_option("--seed", c.seed);
  verify->add_option("-N,--level", level, "polar level for polar-match");
  verify->add_option("--facet", facet, "0 or k, for polar-match")->check(CLI::IsMember({"0", "k"}));
  verify->add_option("-b,--beta", c.beta, "override the suite parameter");
  verify->add_option("--format", c.format)->check(CLI::IsMember({"json"}));
  verify->add_option("-o,--output", c.output);

  auto* figure = app.add_subcommand("figure", "SVG of polar and resonant lines");
  matrix_opt(figure, true);
  figure->add_option("--window", c.window, "x0,x1,y0,y1");
  figure->add_option("--style", style)->check(CLI::IsMember(figure::styles()));
  figure->add_option("--format", c.format)->check(CLI::IsMember({"svg", "json"}));
  figure->add_option("-o,--output", c.output);

  auto* cohom = app.add_subcommand("cohomology", "H^1 support of the Ishida complex and cocycles");
  matrix_opt(cohom, true);
  cohom->add_option("--window", c.window, "box x0,x1,y0,y1");
  cohom->add_option("--format", c.format)->check(CLI::IsMember({"json"}));
  cohom->add_option("-o,--output", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version print and succeed; anything else is a usage error
    int rc = app.exit(e);
    return rc == 0 ? 0 : rp::ValidationError;
  }

  try {
    auto A = CurveMatrix::make(rp::parse_exponents(c.matrix.empty() ? "0,1,3,4" : c.matrix));
    rp::Outcome out;
    if (analyze->parsed()) {
      Window w = c.window.empty() ? rp::default_window(A) : rp::parse_window(c.window);
      out = rp::analyze(A, w, rp::parse_orders(c.orders, A.n()));
    } else if (solve->parsed()) {
      auto [b1, b2] = rp::parse_beta(c.beta);
      out = rp::solve(A, b1, b2, c.bound);
    } else if (verify->parsed()) {
      rp::VerifyOptions o;
      o.suite = suite;
      o.tol = c.tol > 0 ? c.tol : rp::default_tolerance();
      o.seed = c.seed;
      if (verify->count("-N")) o.level = level;
      o.facet = facet == "k" ? Facet::K : Facet::Zero;
      if (!c.beta.empty()) o.beta = rp::parse_beta(c.beta);
      out = rp::verify(A, o);
    } else if (figure->parsed()) {
      Window w = c.window.empty() ? rp::default_window(A) : rp::parse_window(c.window);
      auto spec = figure::build(A, w, style);
      if (figure->count("--format") == 0 || c.format == "svg") {
        int rc = emit(figure::render_svg(A, spec), c.output);
        return rc;
      }
      out.doc = rp::envelope("figure", A);
      rp::Json panels = rp::Json::array();
      for (const auto& p : spec.panels) {
        rp::Json lines = rp::Json::array(), marks = rp::Json::array();
        for (const auto& d : p.lines) {
          auto j = rp::line_json(A, d.line);
          j["special"] = d.special;
          lines.push_back(j);
        }
        for (const auto& m : p.markers) marks.push_back({{"kind", m.kind}, {"at", {rp::q_json(m.b1), rp::q_json(m.b2)}}});
        panels.push_back({{"title", p.title}, {"lines", lines}, {"markers", marks}, {"cone", p.cone}});
      }
      out.doc["payload"] = {{"window", {w.x0, w.x1, w.y0, w.y1}}, {"style", style}, {"panels", panels}};
    } else {
      auto box = c.window.empty() ? std::nullopt : std::optional<Window>(rp::parse_window(c.window));
      out = rp::cohomology(A, box);
    }
    int rc = emit(rp::dump(out.doc), c.output);
    return rc ? rc : out.exit_code;
  } catch (const Error& e) {
    return error_exit(e);
  }
}
