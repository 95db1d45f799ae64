#pragma once

#include <cstdint>
#include <vector>

#include "ortho/multigraph.hpp"

namespace ortho {

struct LayoutConfig {
  int iterations = 1000;
  double ideal_edge_length = 100.0;
  double cooling = 0.99;  // temperature decay factor per iteration, in (0,1)
  std::uint64_t seed = 1;
  double margin = 24.0;  // minimum box gap after overlap removal
};

// Fruchterman-Reingold layout: repulsive k^2/d between all vertex pairs,
// attractive d^2/k per edge occurrence (parallel edges pull once each,
// self-loops exert no force). Deterministic for a fixed seed.
std::vector<Point> force_layout(const Multigraph& graph, const LayoutConfig& cfg);

// Pushes overlapping boxes apart until every pair is separated by at least
// `margin` along some axis. Box dimensions are unchanged; boxes only move.
std::vector<Box> remove_overlaps(const std::vector<Box>& boxes, double margin);

// True iff every box pair has a gap of at least `margin` in x or in y.
bool boxes_disjoint(const std::vector<Box>& boxes, double margin, double eps = kGeomEps);

}  // namespace ortho
