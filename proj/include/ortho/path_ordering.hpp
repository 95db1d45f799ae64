#pragma once

#include <map>
#include <string>
#include <vector>

#include "ortho/edge_routing.hpp"

namespace ortho {

using HEdgeKey = std::pair<int, int>;  // normalized (min vertex, max vertex)

inline HEdgeKey hedge_key(int a, int b) { return a < b ? HEdgeKey{a, b} : HEdgeKey{b, a}; }

// Path order per routing-graph edge: left-to-right for vertical edges,
// top-to-bottom for horizontal ones.
struct BundleOrder {
  std::map<HEdgeKey, std::vector<int>> order;  // hedge -> path indices

  // Relative order of two paths on a shared hedge; true iff a comes first.
  // Returns nothing when the two paths do not share the hedge.
  std::optional<bool> before(int path_a, int path_b, const HEdgeKey& key) const;
};

// Orders every bundle by scanning each segment in its preassigned direction
// (downwards for vertical segments, leftwards for horizontal ones) and
// comparing the directions paths take when they leave the shared subpath at a
// fork vertex. Paths must be simple; endpoints must be unique ports.
BundleOrder order_paths(const RoutingGraph& h, const std::vector<EdgePath>& paths);

// Merges consecutive collinear segments of a polyline and drops zero-length
// ones; the result alternates strictly between horizontal and vertical.
std::vector<Point> join_collinear(const std::vector<Point>& pts);

// Same merge, but returns the indices of the surviving points.
std::vector<int> join_collinear_keep_indices(const std::vector<Point>& pts);

// MLCM self-check: within every maximal shared subpath of two paths the
// bundle order must be constant and must match the fork rule, and the
// number of unavoidable crossings is 1 exactly when the orders at the two
// subpath ends differ.
struct MlcmCheckResult {
  bool ok = true;
  std::string detail;
  long pairs_sharing = 0;
  long unavoidable_crossings = 0;
};
MlcmCheckResult check_mlcm_property(const RoutingGraph& h, const std::vector<EdgePath>& paths,
                                    const BundleOrder& order);

}  // namespace ortho
