#pragma once

#include <string>
#include <vector>

#include "ortho/drawing.hpp"

namespace ortho {

struct DrawingMetrics {
  long crossings = 0;
  long bends = 0;
  double total_edge_length = 0.0;
  double edge_length_variance = 0.0;  // population variance of per-edge lengths
  double area = 0.0;
  double aspect_ratio = 1.0;  // max(w,h)/min(w,h) of the bounding box
  double delta_min = 0.0;     // minimum distance between non-incident objects

  std::vector<std::pair<std::string, std::string>> as_key_values() const;
};

// Crossings are transversal intersections between segments of distinct edges
// (a parallel overlap of positive length counts as one crossing per segment
// pair). delta_min skips intersecting pairs, an edge's own segments, and an
// edge's segments against its endpoint boxes. Throws on an empty drawing.
DrawingMetrics compute_metrics(const Drawing& drawing);

}  // namespace ortho
