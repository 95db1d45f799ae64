#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ortho/edge_routing.hpp"
#include "ortho/multigraph.hpp"
#include "ortho/path_ordering.hpp"
#include "ortho/ports.hpp"

namespace ortho {

// A routed edge as geometry. pts is an alternating orthogonal polyline with
// the ports at both ends. When the path came from the routing graph, hverts
// holds its H-vertex sequence and pt_hidx maps each polyline point to its
// index in hverts (used to look up bundle orders after nudging moved
// coordinates); both stay empty for externally supplied routings.
struct RoutedPath {
  int edge = -1;
  std::vector<Point> pts;
  std::vector<int> hverts;
  std::vector<int> pt_hidx;

  int segments() const { return std::max(0, static_cast<int>(pts.size()) - 1); }
  OrthoSegment segment(int i) const {
    const Point& a = pts[static_cast<size_t>(i)];
    const Point& b = pts[static_cast<size_t>(i + 1)];
    if (nearly_equal(a.y, b.y)) {
      return {Orientation::Horizontal, a.y, {std::min(a.x, b.x), std::max(a.x, b.x)}};
    }
    return {Orientation::Vertical, a.x, {std::min(a.y, b.y), std::max(a.y, b.y)}};
  }
  double length() const {
    double total = 0.0;
    for (int i = 0; i < segments(); ++i) total += segment(i).length();
    return total;
  }
};

struct Drawing {
  std::vector<std::string> vertex_ids;
  std::vector<std::optional<std::string>> labels;
  std::vector<Box> boxes;  // one per vertex
  std::vector<std::string> edge_ids;
  std::vector<std::pair<int, int>> edge_ends;  // (source, target) per edge
  std::vector<RoutedPath> paths;               // one per edge
  std::vector<Port> ports;                     // 2 per edge

  Rect content_bounds() const;
};

// Builds the geometric polyline of a routed path (collinear runs merged) and
// the point-to-H-vertex index map.
RoutedPath realize_path(const RoutingGraph& h, const EdgePath& path);

// Rebuilds each port position from its path endpoint (ports move during full
// nudging, so the polyline is the source of truth afterwards).
void sync_ports_to_paths(Drawing* d);

}  // namespace ortho
