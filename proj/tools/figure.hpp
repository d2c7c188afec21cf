#pragma once

#include <string>
#include <vector>

#include "curvehyp/curve.hpp"
#include "curvehyp/exact.hpp"

namespace curvehyp::figure {

struct DrawnLine {
  ResonantLine line;
  bool special = false;  // member of the special-line arrangement
};

struct Marker {
  Q b1, b2;
  std::string kind;  // "minus-a" or "rank-jump"
};

struct Panel {
  std::string title;
  std::vector<DrawnLine> lines;
  std::vector<Marker> markers;
  bool cone = true;
};

struct FigureSpec {
  Window window;
  std::vector<Panel> panels;
  bool empty() const { return window.x0 >= window.x1 || window.y0 >= window.y1; }
};

std::vector<std::string> styles();  // polar | resonant | both | special
FigureSpec build(const CurveMatrix& A, const Window& w, const std::string& style);
std::string render_svg(const CurveMatrix& A, const FigureSpec& spec);

}  // namespace curvehyp::figure
