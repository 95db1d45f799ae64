#pragma once

#include <optional>
#include <vector>

#include "ortho/routing_graph.hpp"

namespace ortho {

// Travel directions in the routing graph; the enum order is the tie-break
// rank used when routes are equal in (length, bends).
enum class Dir : int { East = 0, North = 1, West = 2, South = 3, None = 4 };

Dir direction_between(const Point& from, const Point& to);
Dir opposite(Dir d);
bool is_horizontal(Dir d);

struct EdgePath {
  int edge = -1;
  std::vector<int> verts;  // vertex ids in H, source port first

  bool empty() const { return verts.size() < 2; }
};

// Shortest path from source to target in H; among all minimum-length paths
// one with the fewest bends (Dijkstra over (vertex, entry direction) states
// with lexicographic cost). Throws RoutingError when no path exists.
EdgePath route_edge(const RoutingGraph& h, int source_vertex, int target_vertex,
                    int edge = -1, const std::string& edge_id = "");

// Number of transversal crossings between two paths, counted combinatorially:
// single shared vertices where the paths' directions interleave, plus shared
// subpaths whose end sides swap.
int path_crossings(const RoutingGraph& h, const EdgePath& p, const EdgePath& q);

// -1 exit turns left of travel, +1 right, 0 straight (or reversal).
int turn_side(Dir travel, Dir exit);

// A maximal run of vertices shared by two paths (consecutive in both).
struct SharedRun {
  int p_begin = 0, p_end = 0;  // inclusive index range in p
  int q_begin = 0, q_end = 0;  // matching range in q (may run backwards)
};
std::vector<SharedRun> path_shared_runs(const EdgePath& p, const EdgePath& q);

// Wherever two paths cross more than once, the section of the larger-id path
// between its first and last vertex shared with the other path is replaced by
// the other path's section; repeated until every pair crosses at most once.
std::vector<EdgePath> reduce_crossings(const RoutingGraph& h, std::vector<EdgePath> paths);

// Plain shortest-path length, for verification.
std::optional<double> shortest_path_length(const RoutingGraph& h, int source, int target);

}  // namespace ortho
