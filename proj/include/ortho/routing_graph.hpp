#pragma once

#include <vector>

#include "ortho/multigraph.hpp"
#include "ortho/ports.hpp"

namespace ortho {

// Index used for drawing borders acting as channel partners.
inline constexpr int kBorder = -1;

// A channel is a maximal empty rectangle between two box sides (or a drawing
// border). A vertical channel's vertical sides rest on its bounding objects;
// edges run vertically through it.
struct Channel {
  Orientation orient = Orientation::Vertical;
  Rect rect;
  int lo = kBorder;  // box left/below of the channel, or border
  int hi = kBorder;  // box right/above of the channel, or border
};

// The line segment carrying routing-graph vertices inside a channel, or the
// stub that connects a port to the rest of the grid.
struct Representative {
  Orientation orient = Orientation::Vertical;
  OrthoSegment seg;
  int channel = -1;  // source channel index, -1 for port stubs
  int port = -1;     // port index if the segment starts in a port
};

struct RoutingGraph {
  struct V {
    Point p;
    int port = -1;  // index into the port list, -1 otherwise
  };
  struct E {
    int a = -1;
    int b = -1;
    Orientation orient = Orientation::Horizontal;
    double length = 0.0;
  };

  std::vector<V> verts;
  std::vector<E> edges;
  std::vector<std::vector<int>> incident;  // vertex -> edge indices
  std::vector<int> port_vertex;            // port index -> vertex id

  int M() const { return static_cast<int>(edges.size()); }
  int other(int edge, int v) const {
    const E& e = edges[static_cast<size_t>(edge)];
    return e.a == v ? e.b : e.a;
  }
};

// For every box (and the low border) the narrowest valid channel towards the
// next box (or border) on the other side, per orientation. Bounds must
// enclose all boxes.
std::vector<Channel> find_channels(const std::vector<Box>& boxes, const Rect& bounds);

// Drops dominated channels (axis projection contained in an intersecting
// channel's projection), picks one representative per kept channel (through a
// boundary port when possible, else the center line), and adds a stub for
// every port that no representative passes through.
std::vector<Representative> select_representatives(const std::vector<Channel>& channels,
                                                   const std::vector<Port>& ports,
                                                   const std::vector<Box>& boxes,
                                                   const Rect& bounds);

// Vertices are the ports plus all perpendicular representative intersections;
// edges join consecutive vertices along each representative. Throws
// ConstructionError if some port ends up with degree zero.
RoutingGraph build_routing_graph(const std::vector<Representative>& reps,
                                 const std::vector<Port>& ports);

}  // namespace ortho
