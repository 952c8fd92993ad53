#pragma once

#include <string>

#include "steinergeo/tree_document.hpp"

namespace steinergeo {

struct RenderStyle {
  double stroke_width = 0.01;     // fraction of a side unit
  double terminal_radius = 0.03;
  double steiner_radius = 0.015;
  double margin = 0.05;           // fraction of the bounding box
};

// Standalone SVG: edges as lines, terminals as filled circles, Steiner points
// as smaller hollow circles, in deterministic element order.
std::string emit_svg(const TreeDocument& doc, const RenderStyle& style = {});

}  // namespace steinergeo
