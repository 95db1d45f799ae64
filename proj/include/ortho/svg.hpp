#pragma once

#include <string>
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/routing_graph.hpp"

namespace ortho {

struct SvgStyle {
  double padding = 16.0;
  double font_size = 9.0;
  bool debug_layers = false;
};

struct SvgDebugData {
  std::vector<Channel> channels;
  std::vector<Representative> representatives;
};

// Deterministic SVG 1.1 document: one rect (plus label) per box, one
// polyline per edge, optional channel/representative overlay.
std::string emit_svg(const Drawing& drawing, const SvgStyle& style,
                     const SvgDebugData* debug = nullptr);

}  // namespace ortho
