#include "ortho/ports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ortho/force_layout.hpp"

namespace ortho {

const char* side_name(Side s) {
  switch (s) {
    case Side::North: return "N";
    case Side::East: return "E";
    case Side::South: return "S";
    case Side::West: return "W";
  }
  return "?";
}

Orientation side_normal_orientation(Side s) {
  return (s == Side::North || s == Side::South) ? Orientation::Vertical
                                                : Orientation::Horizontal;
}

namespace {

struct SideHit {
  Side side = Side::North;
  double fraction = 0.5;  // along the side's ascending axis, in [0,1]
};

// Where the ray from the box center towards `dir` exits the box boundary.
SideHit boundary_exit(const Box& box, double dx, double dy) {
  double hw = box.width / 2.0, hh = box.height / 2.0;
  double tx = std::fabs(dx) > 1e-12 ? hw / std::fabs(dx) : std::numeric_limits<double>::infinity();
  double ty = std::fabs(dy) > 1e-12 ? hh / std::fabs(dy) : std::numeric_limits<double>::infinity();
  SideHit hit;
  if (tx <= ty) {
    hit.side = dx > 0 ? Side::East : Side::West;
    double ycross = dy * tx;
    hit.fraction = (ycross + hh) / box.height;
  } else {
    hit.side = dy > 0 ? Side::North : Side::South;
    double xcross = dx * ty;
    hit.fraction = (xcross + hw) / box.width;
  }
  hit.fraction = std::clamp(hit.fraction, 0.0, 1.0);
  return hit;
}

Side adjacent_side(Side s, bool high_end) {
  switch (s) {
    case Side::East:
    case Side::West:
      return high_end ? Side::North : Side::South;
    case Side::North:
    case Side::South:
      return high_end ? Side::East : Side::West;
  }
  return s;
}

// Circular-order key: coordinate (along the side's ascending axis) where the
// direction ray would cross the side's supporting line; directions outside
// the side's angular window clamp to the nearer corner.
double circular_key(const Box& box, Side side, double dx, double dy) {
  constexpr double kFar = 1e18;
  switch (side) {
    case Side::East:
      if (dx <= 1e-12) return dy > 0 ? kFar : -kFar;
      return dy / dx;
    case Side::West:
      if (dx >= -1e-12) return dy > 0 ? kFar : -kFar;
      return dy / (-dx);
    case Side::North:
      if (dy <= 1e-12) return dx > 0 ? kFar : -kFar;
      return dx / dy;
    case Side::South:
      if (dy >= -1e-12) return dx > 0 ? kFar : -kFar;
      return dx / (-dy);
  }
  (void)box;
  return 0.0;
}

// +1 where the counterclockwise walk around the box runs along the side's
// ascending axis, -1 where it runs against it.
int ccw_sign(Side s) { return (s == Side::East || s == Side::South) ? 1 : -1; }

struct Slot {
  double key = 0.0;
  double subkey = 0.0;
  int edge = -1;
  int endpoint = 0;
  int seq = 0;  // insertion sequence, final tie-break
};

Point side_point(const Box& box, Side side, double fraction) {
  Rect r = box.rect();
  switch (side) {
    case Side::North: return {r.x0 + fraction * r.width(), r.y1};
    case Side::South: return {r.x0 + fraction * r.width(), r.y0};
    case Side::East: return {r.x1, r.y0 + fraction * r.height()};
    case Side::West: return {r.x0, r.y0 + fraction * r.height()};
  }
  return box.center;
}

}  // namespace

PortAssignment assign_ports(const Multigraph& graph, const std::vector<Box>& boxes) {
  if (static_cast<int>(boxes.size()) != graph.n()) {
    throw std::invalid_argument("assign_ports: one box per vertex required");
  }
  if (!boxes_disjoint(boxes, 0.0)) {
    throw std::invalid_argument("assign_ports: boxes must be pairwise disjoint");
  }

  std::map<std::pair<int, Side>, std::vector<Slot>> slots;
  int seq = 0;

  // Non-loop edges first.
  for (int e = 0; e < graph.m(); ++e) {
    if (graph.is_self_loop(e)) continue;
    const Edge& edge = graph.edge(e);
    const Box& bu = boxes[static_cast<size_t>(edge.source)];
    const Box& bv = boxes[static_cast<size_t>(edge.target)];
    double dx = bv.center.x - bu.center.x;
    double dy = bv.center.y - bu.center.y;

    SideHit hu = boundary_exit(bu, dx, dy);
    SideHit hv = boundary_exit(bv, -dx, -dy);

    // Quarter rule: a crossing in the outer quarter of a side forces a
    // Z-shape; move the more extreme endpoint's port around the corner.
    double ext_u = std::fabs(hu.fraction - 0.5);
    double ext_v = std::fabs(hv.fraction - 0.5);
    Side su = hu.side, sv = hv.side;
    if (std::max(ext_u, ext_v) > 0.25 + kGeomEps) {
      bool move_u;
      if (!nearly_equal(ext_u, ext_v)) {
        move_u = ext_u > ext_v;
      } else {
        move_u = graph.vertex(edge.source).id <= graph.vertex(edge.target).id;
      }
      if (move_u) {
        su = adjacent_side(hu.side, hu.fraction > 0.5);
      } else {
        sv = adjacent_side(hv.side, hv.fraction > 0.5);
      }
    }

    double ku = circular_key(bu, su, dx, dy);
    double kv = circular_key(bv, sv, -dx, -dy);
    slots[{edge.source, su}].push_back({ku, 0.0, e, 0, seq++});
    slots[{edge.target, sv}].push_back({kv, 0.0, e, 1, seq++});
  }

  // Parallel edges: consecutive ranks, mutually reversed circular order.
  // Within a side the primary keys of a parallel bundle coincide, so a signed
  // edge-index subkey fixes the suborder.
  for (auto& [key, list] : slots) {
    Side side = key.second;
    for (Slot& s : list) {
      int sign = s.endpoint == 0 ? ccw_sign(side) : -ccw_sign(side);
      s.subkey = sign * static_cast<double>(s.edge);
    }
  }

  // Self-loops go to the least populated side, both ports adjacent.
  for (int e = 0; e < graph.m(); ++e) {
    if (!graph.is_self_loop(e)) continue;
    int v = graph.edge(e).source;
    Side best = Side::North;
    size_t best_count = std::numeric_limits<size_t>::max();
    for (Side s : {Side::North, Side::East, Side::South, Side::West}) {
      auto it = slots.find({v, s});
      size_t count = it == slots.end() ? 0 : it->second.size();
      if (count < best_count) {
        best_count = count;
        best = s;
      }
    }
    constexpr double kEnd = 2e18;  // past any circular key: append at the side end
    slots[{v, best}].push_back({kEnd, static_cast<double>(seq), e, 0, seq});
    ++seq;
    slots[{v, best}].push_back({kEnd, static_cast<double>(seq), e, 1, seq});
    ++seq;
  }

  PortAssignment out;
  out.ports.assign(static_cast<size_t>(2 * graph.m()), Port{});

  for (auto& [key, list] : slots) {
    int v = key.first;
    Side side = key.second;
    std::sort(list.begin(), list.end(), [](const Slot& a, const Slot& b) {
      if (a.key != b.key) return a.key < b.key;
      if (a.subkey != b.subkey) return a.subkey < b.subkey;
      return a.seq < b.seq;
    });
    int p = static_cast<int>(list.size());
    std::vector<int>& order = out.side_order[{v, side}];
    for (int i = 0; i < p; ++i) {
      const Slot& s = list[static_cast<size_t>(i)];
      double fraction = static_cast<double>(i + 1) / static_cast<double>(p + 1);
      Port port;
      port.edge = s.edge;
      port.endpoint = s.endpoint;
      port.vertex = v;
      port.side = side;
      port.position = side_point(boxes[static_cast<size_t>(v)], side, fraction);
      out.ports[static_cast<size_t>(2 * s.edge + s.endpoint)] = port;
      order.push_back(2 * s.edge + s.endpoint);
    }
  }
  return out;
}

}  // namespace ortho
