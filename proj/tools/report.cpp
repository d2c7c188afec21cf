#include "report.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "curvehyp/cohomology.hpp"
#include "curvehyp/error.hpp"
#include "curvehyp/series.hpp"

namespace curvehyp::report {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Validation, "parse", "cannot read '" + s + "' as an integer in " + what);
  }
}

Json affine_vec(const std::vector<Affine>& v) {
  Json j = Json::array();
  for (const auto& a : v) j.push_back(a.str());
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j{{"pass", v.pass}, {"excused", v.excused}};
  if (!v.failure.empty()) j["failure"] = v.failure;
  return j;
}

Json finite_json(const FiniteSeries& s) {
  Json j;
  j["facet"] = facet_name(s.facet);
  j["level"] = q_json(s.level);
  j["series"] = s.str();
  j["stripped_factor"] = s.removed.str();
  j["scale"] = q_json(s.scale);
  Json terms = Json::array();
  auto supp = s.exact_support();
  for (size_t t = 0; t < s.terms.size(); ++t) {
    Json e = Json::array();
    for (const auto& q : supp[t]) e.push_back(q_json(q));
    terms.push_back({{"exponent", e}, {"coefficient", s.terms[t].coef.str()}});
  }
  j["terms"] = terms;
  return j;
}

Json series_json(const TruncatedSeries& s) {
  Json j;
  j["base"] = s.base.str();
  j["bound"] = s.bound;
  j["mode"] = s.mode == SeriesMode::Literal ? "literal" : "restricted";
  j["term_count"] = s.terms.size();
  Json lead = Json::array();
  for (size_t t = 0; t < s.terms.size() && t < 6; ++t) {
    Json u = Json::array();
    for (auto c : s.terms[t].u) u.push_back(c);
    lead.push_back({{"u", u}, {"coefficient", s.terms[t].coef.str()}});
  }
  j["leading_terms"] = lead;
  return j;
}

Json provenance(const CurveMatrix& A) {
  return {{"pairing", "beta_2 = N is polar iff N in G_k; k*beta_1 - beta_2 = N is polar iff N in G_0"},
          {"branch_policy", "powers exp(beta*L) with L tracked along the ray from the anchor at z = 0 (Log x_1)"},
          {"truncation_bound", default_bound(A)},
          {"normalization", "finite solutions are stripped of constant factors and made monic on the lex-first term"}};
}

}  // namespace

// ---- parsing ----

IVec parse_exponents(const std::string& text) {
  IVec v;
  for (const auto& s : split(text, ',')) v.push_back(parse_int(s, "-A"));
  return v;
}

std::pair<Q, Q> parse_beta(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) fail(ErrorKind::Validation, "parse", "-b needs two entries, got '" + text + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

Window parse_window(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 4) fail(ErrorKind::Validation, "parse", "--window needs x0,x1,y0,y1");
  return {parse_int(parts[0], "--window"), parse_int(parts[1], "--window"), parse_int(parts[2], "--window"),
          parse_int(parts[3], "--window")};
}

std::vector<TermOrder> parse_orders(const std::vector<std::string>& names, int n) {
  std::vector<TermOrder> out;
  for (const auto& s : names) {
    if (s == "both") {
      out.push_back(TermOrder::d1_first(n));
      out.push_back(TermOrder::dn_first(n));
    } else if (s == "d1-first") {
      out.push_back(TermOrder::d1_first(n));
    } else if (s == "dn-first") {
      out.push_back(TermOrder::dn_first(n));
    } else if (s == "dn-then-d1") {
      out.push_back(TermOrder::dn_then_d1(n));
    } else {
      out.push_back(TermOrder::parse(s, n));
    }
  }
  return out;
}

double default_tolerance() {
  if (const char* env = std::getenv("CURVEHYP_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    fail(ErrorKind::Validation, "tolerance", std::string("CURVEHYP_TOL is not a positive number: ") + env);
  }
  return 1e-6;
}

// ---- serialization ----

Json q_json(const Q& q) { return to_string(q); }

Json complex_json(C z) { return Json::array({z.real(), z.imag()}); }

Json line_json(const CurveMatrix& A, const ResonantLine& L) {
  return {{"facet", facet_name(L.facet)}, {"level", q_json(L.level)}, {"polar", L.polar}, {"equation", L.str(A)}};
}

Json semigroup_json(const NumericalSemigroup& S) {
  return {{"generators", S.generators()}, {"gaps", S.gaps()}, {"frobenius", S.frobenius()}};
}

Json envelope(const std::string& command, const CurveMatrix& A) {
  Json j;
  j["schema"] = kSchema;
  j["tool"] = {{"name", "curvehyp"}, {"version", kVersion}};
  j["command"] = command;
  j["matrix"] = A.exponents();
  j["provenance"] = provenance(A);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- commands ----

Window default_window(const CurveMatrix& A) {
  const int64_t k = A.k();
  int64_t B = rank_jumping_parameters(A).box_bound;
  int64_t y1 = std::max<int64_t>(B, 2 * k) + 1;
  return {-3, (2 * y1) / k + 1, -k - 1, y1};
}

Outcome analyze(const CurveMatrix& A, const Window& w, const std::vector<TermOrder>& orders) {
  Json doc = envelope("analyze", A);
  Json p;
  p["volume"] = A.volume();
  p["semigroups"] = {{"G_0", semigroup_json(semigroup_G0(A))}, {"G_k", semigroup_json(semigroup_Gk(A))}};
  p["resonant_arrangement"] = {{"facet-0", "b2 in Z"}, {"facet-k", std::to_string(A.k()) + "*b1 - b2 in Z"}};
  p["polar_levels"] = {{"facet-0", "b2 = N with N in G_k"}, {"facet-k", "k*b1 - b2 = N with N in G_0"}};
  p["window"] = {w.x0, w.x1, w.y0, w.y1};
  Json pl = Json::array(), rl = Json::array();
  for (const auto& L : polar_lines(A, w)) pl.push_back(line_json(A, L));
  for (const auto& L : resonant_lines(A, w)) rl.push_back(line_json(A, L));
  p["polar_lines"] = pl;
  p["resonant_lines"] = rl;
  auto rj = rank_jumping_parameters(A);
  Json pts = Json::array();
  for (auto [a, b] : rj.points) pts.push_back({a, b});
  p["E_A"] = pts;
  p["E_A_box_bound"] = rj.box_bound;

  Json ords = Json::array();
  for (const auto& o : orders) {
    auto gb = toric_ideal_groebner(A, o);
    auto pairs = standard_pairs(gb.initial_ideal());
    Json jp = Json::array(), fe = Json::array(), lines = Json::array();
    int64_t tops = 0;
    for (const auto& sp : pairs) {
      jp.push_back(sp.str());
      tops += sp.top;
    }
    for (const auto& v : fake_exponents(A, pairs, Param::symbolic())) fe.push_back(v.str());
    for (const auto& L : order_special_lines(A, o)) lines.push_back(line_json(A, L));
    Json gens = Json::array();
    for (const auto& b : gb.elems()) gens.push_back(monomial_str(b.lead) + " - " + monomial_str(b.trail));
    ords.push_back({{"name", o.name()},
                    {"order", o.str()},
                    {"groebner_basis", gens},
                    {"standard_pairs", jp},
                    {"top_pairs", tops},
                    {"fake_exponents", fe},
                    {"special_lines", lines}});
  }
  p["orders"] = ords;

  const int n = A.n();
  std::vector<TermOrder> base{TermOrder::d1_first(n), TermOrder::dn_first(n)};
  Json L = Json::array();
  for (const auto& l : special_lines(A, base)) L.push_back(line_json(A, l));
  p["special_lines"] = L;
  std::vector<TermOrder> extra;
  for (const auto& o : orders)
    if (o.low_to_high() != base[0].low_to_high() && o.low_to_high() != base[1].low_to_high()) extra.push_back(o);
  if (!extra.empty()) {
    auto all = base;
    all.insert(all.end(), extra.begin(), extra.end());
    Json Lp = Json::array();
    for (const auto& l : special_lines(A, all)) Lp.push_back(line_json(A, l));
    p["special_lines_prime"] = Lp;
  }
  doc["payload"] = p;
  return {doc, Ok};
}

Outcome solve(const CurveMatrix& A, const Q& b1, const Q& b2, int64_t bound) {
  Json doc = envelope("solve", A);
  auto basis = solution_basis_at_point(A, b1, b2, bound);
  Json p;
  p["beta"] = {q_json(b1), q_json(b2)};
  p["rank"] = basis.rank;
  p["order"] = basis.order;
  p["independent"] = basis.independent;
  Json sols = Json::array();
  int64_t finite = 0;
  bool all_pass = true;
  for (const auto& s : basis.solutions) {
    Json j;
    j["tag"] = deformability_name(s.tag);
    j["leading_exponent"] = affine_vec(s.leading_exponent());
    j["annihilation"] = verdict_json(s.annihilation);
    all_pass = all_pass && s.annihilation.pass;
    if (s.finite) {
      j["kind"] = "finite";
      j["finite"] = finite_json(*s.finite);
      ++finite;
    } else {
      j["kind"] = "series";
      j["series"] = series_json(*s.series);
    }
    sols.push_back(j);
  }
  p["solutions"] = sols;
  p["finite_count"] = finite;
  // finite solutions carried by the polar lines through beta
  Json polar = Json::array();
  const Q form[2] = {b2, Q(A.k()) * b1 - b2};
  const Facet fs[2] = {Facet::Zero, Facet::K};
  int polar_count = 0;
  for (int t = 0; t < 2; ++t) {
    if (!is_integer(form[t])) continue;
    int64_t N = to_int64(form[t]);
    if (!polar_level_semigroup(A, fs[t]).contains(N)) continue;
    ++polar_count;
    auto s = polar_line_solution(A, fs[t], N).evaluate(b1);
    Json j = finite_json(s);
    j["annihilation"] = verdict_json(annihilation_check(s, A, Param::exact(b1, b2)));
    polar.push_back(j);
  }
  p["polar_line_solutions"] = polar;
  if (polar_count == 2) {
    auto cr = coincidence_at_intersection(A, b1, b2);
    p["coincidence"] = cr.verdict == Coincidence::IndependentPair ? "independent-pair" : "single-series";
  }
  p["resonant_facets"] = Json::array();
  for (Facet f : is_resonant(A, Param::exact(b1, b2))) p["resonant_facets"].push_back(facet_name(f));
  doc["payload"] = p;
  return {doc, (all_pass && basis.independent) ? Ok : CheckFailed};
}

Outcome cohomology(const CurveMatrix& A, std::optional<Window> box) {
  Json doc = envelope("cohomology", A);
  Window w = box ? *box : cohomology_box(A);
  auto support = h1_support(A, w);
  Json p;
  p["box"] = {w.x0, w.x1, w.y0, w.y1};
  Json sup = Json::array(), pieces = Json::array(), cocycles = Json::array();
  bool ok = true;
  for (auto [a1, a2] : support) {
    sup.push_back({a1, a2});
    auto P = ishida_piece(A, a1, a2);
    auto mat = [](const QMatrix& m) {
      Json j = Json::array();
      for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(q_json(q));
        j.push_back(r);
      }
      return j;
    };
    auto mono = [](const std::optional<IVec>& v) { return v ? Json(monomial_str(*v)) : Json(nullptr); };
    pieces.push_back({{"alpha", {a1, a2}},
                      {"dims", {P.d0, P.d1, P.d2}},
                      {"h", {P.h0, P.h1, P.h2}},
                      {"basis", {mono(P.basis0), mono(P.basis1_first), mono(P.basis1_last), mono(P.basis2)}},
                      {"delta0", mat(P.delta0)},
                      {"delta1", mat(P.delta1)}});
    auto in = [&](int64_t x, int64_t y) {
      const auto& pts = rank_jumping_parameters(A).points;
      return std::find(pts.begin(), pts.end(), std::make_pair(x, y)) != pts.end();
    };
    if (!in(a1, a2)) {
      ok = false;
      continue;
    }
    auto g = cocycle_generator(A, a1, a2);
    ok = ok && g.certified;
    cocycles.push_back({{"alpha", {a1, a2}},
                        {"v", g.v},
                        {"v_prime", g.v_prime},
                        {"shift", g.m},
                        {"certified", g.certified},
                        {"pair", g.str()}});
  }
  auto rj = rank_jumping_parameters(A).points;
  std::vector<std::pair<int64_t, int64_t>> rj_in;
  for (auto pt : rj)
    if (pt.first >= w.x0 && pt.first <= w.x1 && pt.second >= w.y0 && pt.second <= w.y1) rj_in.push_back(pt);
  bool match = rj_in == support;
  p["support"] = sup;
  p["pieces"] = pieces;
  p["cocycles"] = cocycles;
  p["matches_E_A"] = match;
  doc["payload"] = p;
  return {doc, (ok && match) ? Ok : CheckFailed};
}

}  // namespace curvehyp::report
