#include "ortho/drawing.hpp"

#include <algorithm>
#include <cmath>

namespace ortho {

Rect Drawing::content_bounds() const {
  bool any = false;
  Rect b{0, 0, 0, 0};
  auto extend = [&](const Rect& r) {
    b = any ? b.united(r) : r;
    any = true;
  };
  for (const Box& box : boxes) extend(box.rect());
  for (const RoutedPath& p : paths) {
    for (const Point& pt : p.pts) extend({pt.x, pt.y, pt.x, pt.y});
  }
  return b;
}

RoutedPath realize_path(const RoutingGraph& h, const EdgePath& path) {
  RoutedPath out;
  out.edge = path.edge;
  out.hverts = path.verts;
  std::vector<Point> raw;
  raw.reserve(path.verts.size());
  for (int v : path.verts) raw.push_back(h.verts[static_cast<size_t>(v)].p);
  out.pt_hidx = join_collinear_keep_indices(raw);
  out.pts.reserve(out.pt_hidx.size());
  for (int i : out.pt_hidx) out.pts.push_back(raw[static_cast<size_t>(i)]);
  return out;
}

void sync_ports_to_paths(Drawing* d) {
  for (size_t e = 0; e < d->paths.size(); ++e) {
    const RoutedPath& p = d->paths[e];
    if (p.pts.empty()) continue;
    d->ports[2 * e].position = p.pts.front();
    d->ports[2 * e + 1].position = p.pts.back();
  }
}

}  // namespace ortho
