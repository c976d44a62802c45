#ifndef CURVEDIM_PLOT_HPP
#define CURVEDIM_PLOT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "curvedim/nodeset.hpp"

namespace curvedim {

// What to draw. All geometry is converted to double here; every
// mathematical decision has already been made in exact arithmetic.
struct PlotCurveItem {
  enum class Style { line_segment, param_polyline, contour };
  Style style = Style::contour;
  Poly2 poly;                                      // implicit form
  std::function<std::pair<double, double>(double)> param;  // for polylines
};

struct PlotSpec {
  NodeSet nodes;
  std::vector<std::size_t> highlighted;
  std::vector<PlotCurveItem> curves;
};

// SVG 1.1. viewBox = bounding box of the nodes + 10% margin; nodes are
// filled circles of radius 0.8% of the viewBox width; highlighted nodes
// use a second style; lines are clipped segments; parametrized conics are
// 256-segment polylines; other implicit curves use a 256x256 sign-grid
// contour.
std::string render_svg(const PlotSpec& spec);

// Classifies a loaded polynomial: degree 1 becomes an exact clipped
// segment; a degree-2 curve with a discoverable rational point gets a
// parametrized polyline; everything else falls back to the contour.
PlotCurveItem plot_item_for_poly(const Poly2& poly);

}  // namespace curvedim

#endif  // CURVEDIM_PLOT_HPP
