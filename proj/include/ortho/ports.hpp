#pragma once

#include <map>
#include <string>
#include <vector>

#include "ortho/multigraph.hpp"

namespace ortho {

enum class Side { North, East, South, West };

const char* side_name(Side s);
Orientation side_normal_orientation(Side s);  // direction a port leaves the box

struct Port {
  int edge = -1;
  int endpoint = 0;  // 0 or 1
  int vertex = -1;
  Side side = Side::North;
  Point position;
};

// One port per edge endpoint. ports[2*e + k] is endpoint k of edge e.
// side_order lists the ports of each box side in ascending coordinate order
// (x for North/South, y for East/West).
struct PortAssignment {
  std::vector<Port> ports;
  std::map<std::pair<int, Side>, std::vector<int>> side_order;

  const Port& port(int edge, int endpoint) const {
    return ports[static_cast<size_t>(2 * edge + endpoint)];
  }
};

// Chooses sides by intersecting each center-to-center segment with the box
// boundaries, applies the quarter rule (a crossing in the outer quarter of a
// side moves one port to the adjacent side so the edge can bend as an L away
// from the barycenter), orders ports along each side by the circular order of
// those segments, keeps parallel edges consecutive with mutually reversed
// circular order, puts self-loop ports adjacent on the least populated side,
// and finally spreads each side's ports evenly (k-th of p at k/(p+1)).
PortAssignment assign_ports(const Multigraph& graph, const std::vector<Box>& boxes);

}  // namespace ortho
