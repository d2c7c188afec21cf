#include "figure.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "curvehyp/error.hpp"
#include "curvehyp/toric.hpp"

namespace curvehyp::figure {

namespace {

constexpr double kPanel = 320, kPad = 28;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  Window w;
  double ox;
  double px(double b1) const { return ox + kPad + (b1 - w.x0) / double(w.x1 - w.x0) * (kPanel - 2 * kPad); }
  double py(double b2) const { return kPanel - kPad - (b2 - w.y0) / double(w.y1 - w.y0) * (kPanel - 2 * kPad); }
};

void markers_for(const CurveMatrix& A, const Window& w, Panel& p, bool jumps) {
  auto inside = [&](const Q& a, const Q& b) { return a >= w.x0 && a <= w.x1 && b >= w.y0 && b <= w.y1; };
  for (int i = 0; i < A.n(); ++i)
    if (inside(Q(-1), Q(-A.exponent(i)))) p.markers.push_back({Q(-1), Q(-A.exponent(i)), "minus-a"});
  if (!jumps) return;
  for (auto [b1, b2] : rank_jumping_parameters(A).points)
    if (inside(Q(b1), Q(b2))) p.markers.push_back({Q(b1), Q(b2), "rank-jump"});
}

}  // namespace

std::vector<std::string> styles() { return {"polar", "resonant", "both", "special"}; }

FigureSpec build(const CurveMatrix& A, const Window& w, const std::string& style) {
  const auto known = styles();
  if (std::find(known.begin(), known.end(), style) == known.end())
    fail(ErrorKind::Validation, "style", "unknown figure style '" + style + "'");
  FigureSpec spec;
  spec.window = w;
  if (spec.empty()) {
    spec.panels.push_back({style, {}, {}, false});
    return spec;
  }
  auto polar = [&] {
    Panel p{"polar lines", {}, {}, true};
    for (const auto& L : polar_lines(A, w)) p.lines.push_back({L, false});
    markers_for(A, w, p, true);
    return p;
  };
  auto resonant = [&] {
    Panel p{"resonant lines", {}, {}, true};
    for (const auto& L : resonant_lines(A, w)) p.lines.push_back({L, false});
    markers_for(A, w, p, false);
    return p;
  };
  if (style == "polar") spec.panels.push_back(polar());
  if (style == "resonant") spec.panels.push_back(resonant());
  if (style == "both") {
    spec.panels.push_back(polar());
    spec.panels.push_back(resonant());
  }
  if (style == "special") {
    Panel p = polar();
    p.title = "special lines";
    auto special = special_lines(A, {TermOrder::d1_first(A.n()), TermOrder::dn_first(A.n())});
    for (auto& d : p.lines) d.special = std::find(special.begin(), special.end(), d.line) != special.end();
    spec.panels.push_back(p);
  }
  return spec;
}

std::string render_svg(const CurveMatrix& A, const FigureSpec& spec) {
  const double width = kPanel * std::max<size_t>(1, spec.panels.size());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(width) << ' ' << num(kPanel)
     << "\" width=\"" << num(width) << "\" height=\"" << num(kPanel) << "\">\n";
  os << "<title>" << A.str() << "</title>\n";
  for (size_t pi = 0; pi < spec.panels.size(); ++pi) {
    const Panel& p = spec.panels[pi];
    if (spec.empty()) {
      os << "<g class=\"panel\" id=\"panel-" << pi << "\"/>\n";
      continue;
    }
    Frame fr{spec.window, kPanel * pi};
    const Window& w = spec.window;
    double X0 = fr.px(w.x0), X1 = fr.px(w.x1), Y0 = fr.py(w.y1), Y1 = fr.py(w.y0);
    os << "<g class=\"panel\" id=\"panel-" << pi << "\">\n";
    os << "<clipPath id=\"clip-" << pi << "\"><rect x=\"" << num(X0) << "\" y=\"" << num(Y0) << "\" width=\""
       << num(X1 - X0) << "\" height=\"" << num(Y1 - Y0) << "\"/></clipPath>\n";
    os << "<text x=\"" << num(fr.ox + kPanel / 2) << "\" y=\"16.000\" text-anchor=\"middle\" font-size=\"12\">"
       << p.title << "</text>\n";
    os << "<rect x=\"" << num(X0) << "\" y=\"" << num(Y0) << "\" width=\"" << num(X1 - X0) << "\" height=\""
       << num(Y1 - Y0) << "\" fill=\"none\" stroke=\"#999\"/>\n";
    os << "<g clip-path=\"url(#clip-" << pi << ")\">\n";
    if (p.cone) {
      // beta_2 < 0 and k beta_1 < beta_2
      double R = 4.0 * (std::abs(w.x0) + std::abs(w.x1) + std::abs(w.y0) + std::abs(w.y1) + 1);
      double k = double(A.k());
      os << "<polygon class=\"cone\" points=\"" << num(fr.px(0)) << ',' << num(fr.py(0)) << ' ' << num(fr.px(-R))
         << ',' << num(fr.py(0)) << ' ' << num(fr.px(-R)) << ',' << num(fr.py(-k * R))
         << "\" fill=\"#dfe8f5\" stroke=\"none\"/>\n";
    }
    // axes
    if (w.y0 <= 0 && 0 <= w.y1)
      os << "<line class=\"axis\" x1=\"" << num(X0) << "\" y1=\"" << num(fr.py(0)) << "\" x2=\"" << num(X1)
         << "\" y2=\"" << num(fr.py(0)) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    if (w.x0 <= 0 && 0 <= w.x1)
      os << "<line class=\"axis\" x1=\"" << num(fr.px(0)) << "\" y1=\"" << num(Y0) << "\" x2=\"" << num(fr.px(0))
         << "\" y2=\"" << num(Y1) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    for (const auto& d : p.lines) {
      double lvl = to_double(d.line.level), a, b, c, e;
      if (d.line.facet == Facet::Zero) {
        a = w.x0, b = lvl, c = w.x1, e = lvl;
      } else {
        // beta_2 = k beta_1 - N, extended past the window and clipped
        double lo = w.x0 - 1.0, hi = w.x1 + 1.0;
        a = lo, b = double(A.k()) * lo - lvl, c = hi, e = double(A.k()) * hi - lvl;
      }
      const char* color = d.line.facet == Facet::Zero ? "#1f4e9c" : "#b0302a";
      os << "<line class=\"" << (d.line.polar ? "polar" : "nonpolar") << (d.special ? " special" : "")
         << "\" data-facet=\"" << facet_name(d.line.facet) << "\" data-level=\"" << to_string(d.line.level)
         << "\" x1=\"" << num(fr.px(a)) << "\" y1=\"" << num(fr.py(b)) << "\" x2=\"" << num(fr.px(c))
         << "\" y2=\"" << num(fr.py(e)) << "\" stroke=\"" << (d.special ? "#e08a00" : color)
         << "\" stroke-width=\"" << (d.special ? "2.5" : "1") << "\""
         << (d.line.polar ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
    }
    for (const auto& m : p.markers) {
      double cx = fr.px(to_double(m.b1)), cy = fr.py(to_double(m.b2));
      if (m.kind == "rank-jump")
        os << "<rect class=\"rank-jump\" x=\"" << num(cx - 4) << "\" y=\"" << num(cy - 4)
           << "\" width=\"8.000\" height=\"8.000\" fill=\"#000\"/>\n";
      else
        os << "<circle class=\"minus-a\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
           << "\" r=\"3.000\" fill=\"#fff\" stroke=\"#000\"/>\n";
    }
    os << "</g>\n</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace curvehyp::figure
