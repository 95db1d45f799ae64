#include "ortho/routing_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

// Merged set of blocked intervals, used while sweeping channel partners.
class IntervalSet {
 public:
  void add(double lo, double hi) {
    if (hi <= lo) return;
    auto it = blocked_.lower_bound(lo);
    if (it != blocked_.begin()) {
      auto prev = std::prev(it);
      if (prev->second >= lo - kGeomEps) it = prev;
    }
    while (it != blocked_.end() && it->first <= hi + kGeomEps) {
      lo = std::min(lo, it->first);
      hi = std::max(hi, it->second);
      it = blocked_.erase(it);
    }
    blocked_.emplace(lo, hi);
  }

  // Longest free gap within [lo, hi] whose closure meets both `a` and `b`.
  // Ties resolved towards the lowest gap.
  std::optional<Interval> best_gap(Interval window, Interval a, Interval b) const {
    std::optional<Interval> best;
    double cursor = window.lo;
    auto consider = [&](double g0, double g1) {
      if (g1 - g0 <= kGeomEps) return;
      Interval gap{g0, g1};
      if (!gap.overlaps(a) || !gap.overlaps(b)) return;
      if (!best || gap.length() > best->length() + kGeomEps) best = gap;
    };
    for (const auto& [lo, hi] : blocked_) {
      if (hi <= window.lo) continue;
      if (lo >= window.hi) break;
      consider(cursor, std::min(lo, window.hi));
      cursor = std::max(cursor, hi);
      if (cursor >= window.hi) break;
    }
    consider(cursor, window.hi);
    return best;
  }

 private:
  std::map<double, double> blocked_;
};

// Pseudo-box view used so borders participate like zero-width boxes.
struct ChannelObject {
  int id = kBorder;       // box index or kBorder
  double low = 0.0;       // coordinate of the side facing the channel axis
  double high = 0.0;      // other side
  Interval across;        // extent perpendicular to the channel axis
};

// Channels along one axis. For Vertical: "axis" is x, "across" is y.
void find_axis_channels(const std::vector<Box>& boxes, const Rect& bounds,
                        Orientation orient, std::vector<Channel>* out) {
  bool vertical = orient == Orientation::Vertical;
  Interval full = vertical ? bounds.yspan() : bounds.xspan();
  double lo_border = vertical ? bounds.x0 : bounds.y0;
  double hi_border = vertical ? bounds.x1 : bounds.y1;

  std::vector<ChannelObject> objs;
  objs.push_back({kBorder, lo_border, lo_border, full});  // low border
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    Rect r = boxes[static_cast<size_t>(i)].rect();
    if (vertical) {
      objs.push_back({i, r.x0, r.x1, r.yspan()});
    } else {
      objs.push_back({i, r.y0, r.y1, r.xspan()});
    }
  }
  ChannelObject hi{kBorder, hi_border, hi_border, full};

  // Partners ordered by their near side; the first valid one is narrowest.
  std::vector<int> partner_order(objs.size());
  for (size_t i = 0; i < objs.size(); ++i) partner_order[i] = static_cast<int>(i);
  std::sort(partner_order.begin(), partner_order.end(), [&](int a, int b) {
    if (objs[static_cast<size_t>(a)].low != objs[static_cast<size_t>(b)].low) {
      return objs[static_cast<size_t>(a)].low < objs[static_cast<size_t>(b)].low;
    }
    return objs[static_cast<size_t>(a)].id < objs[static_cast<size_t>(b)].id;
  });

  for (const ChannelObject& u : objs) {
    IntervalSet blocked;
    std::optional<Channel> found;
    size_t next = 0;
    auto try_partner = [&](const ChannelObject& v) {
      if (v.low <= u.high + kGeomEps) return;
      // Blockers are boxes strictly overlapping the open strip; add lazily.
      while (next < partner_order.size()) {
        const ChannelObject& w = objs[static_cast<size_t>(partner_order[next])];
        if (w.low >= v.low - kGeomEps) break;
        ++next;
        if (w.id == u.id || w.id == kBorder) continue;
        if (w.high > u.high + kGeomEps && w.low < v.low - kGeomEps) {
          blocked.add(w.across.lo, w.across.hi);
        }
      }
      auto gap = blocked.best_gap(full, u.across, v.across);
      if (!gap) return;
      Channel c;
      c.orient = orient;
      c.lo = u.id;
      c.hi = v.id;
      if (vertical) {
        c.rect = {u.high, gap->lo, v.low, gap->hi};
      } else {
        c.rect = {gap->lo, u.high, gap->hi, v.low};
      }
      found = c;
    };
    for (size_t k = 0; k < partner_order.size() && !found; ++k) {
      const ChannelObject& v = objs[static_cast<size_t>(partner_order[k])];
      if (v.id == u.id) continue;
      try_partner(v);
    }
    if (!found) try_partner(hi);
    if (found) out->push_back(*found);
  }
}

}  // namespace

std::vector<Channel> find_channels(const std::vector<Box>& boxes, const Rect& bounds) {
  for (const Box& b : boxes) {
    Rect r = b.rect();
    if (r.x0 < bounds.x0 - kGeomEps || r.x1 > bounds.x1 + kGeomEps ||
        r.y0 < bounds.y0 - kGeomEps || r.y1 > bounds.y1 + kGeomEps) {
      throw std::invalid_argument("find_channels: box outside bounds");
    }
  }
  std::vector<Channel> out;
  find_axis_channels(boxes, bounds, Orientation::Vertical, &out);
  find_axis_channels(boxes, bounds, Orientation::Horizontal, &out);
  return out;
}

namespace {

Interval channel_projection(const Channel& c) {
  return c.orient == Orientation::Vertical ? c.rect.yspan() : c.rect.xspan();
}

bool rects_meet(const Rect& a, const Rect& b) {
  return a.x0 <= b.x1 + kGeomEps && b.x0 <= a.x1 + kGeomEps && a.y0 <= b.y1 + kGeomEps &&
         b.y0 <= a.y1 + kGeomEps;
}

bool contained(const Interval& inner, const Interval& outer) {
  return inner.lo >= outer.lo - kGeomEps && inner.hi <= outer.hi + kGeomEps;
}

}  // namespace

std::vector<Representative> select_representatives(const std::vector<Channel>& channels,
                                                   const std::vector<Port>& ports,
                                                   const std::vector<Box>& boxes,
                                                   const Rect& bounds) {
  // Dominated-channel pruning within each orientation.
  std::vector<char> dropped(channels.size(), 0);
  for (size_t i = 0; i < channels.size(); ++i) {
    for (size_t j = 0; j < channels.size(); ++j) {
      if (i == j || dropped[i]) continue;
      const Channel& c = channels[i];
      const Channel& d = channels[j];
      if (c.orient != d.orient || !rects_meet(c.rect, d.rect)) continue;
      Interval pc = channel_projection(c), pd = channel_projection(d);
      if (!contained(pc, pd)) continue;
      bool strictly = pc.length() < pd.length() - kGeomEps;
      if (strictly || (!dropped[j] && i > j)) dropped[i] = 1;
    }
  }

  std::vector<Representative> reps;
  for (size_t ci = 0; ci < channels.size(); ++ci) {
    if (dropped[ci]) continue;
    const Channel& c = channels[ci];
    bool vertical = c.orient == Orientation::Vertical;
    Interval along = vertical ? c.rect.yspan() : c.rect.xspan();
    Interval axis = vertical ? c.rect.xspan() : c.rect.yspan();
    double mid = (axis.lo + axis.hi) / 2.0;

    // A port on the channel's low/high edge whose outward ray runs through
    // the channel lets the representative start in that port.
    int best_port = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (size_t pi = 0; pi < ports.size(); ++pi) {
      const Port& p = ports[pi];
      if (side_normal_orientation(p.side) != c.orient) continue;
      double coord = vertical ? p.position.x : p.position.y;
      double across = vertical ? p.position.y : p.position.x;
      if (coord < axis.lo + kGeomEps || coord > axis.hi - kGeomEps) continue;
      bool at_low = nearly_equal(across, along.lo);
      bool at_high = nearly_equal(across, along.hi);
      bool points_in = (p.side == Side::North || p.side == Side::East) ? at_low : at_high;
      if (!(at_low || at_high) || !points_in) continue;
      double d = std::fabs(coord - mid);
      if (d < best_dist) {
        best_dist = d;
        best_port = static_cast<int>(pi);
      }
    }

    Representative r;
    r.orient = c.orient;
    r.channel = static_cast<int>(ci);
    r.port = best_port;
    double coord = best_port >= 0
                       ? (vertical ? ports[static_cast<size_t>(best_port)].position.x
                                   : ports[static_cast<size_t>(best_port)].position.y)
                       : mid;
    r.seg = {c.orient, coord, along};
    reps.push_back(r);
  }

  // Stubs for ports no representative passes through.
  size_t channel_rep_count = reps.size();
  for (size_t pi = 0; pi < ports.size(); ++pi) {
    const Port& p = ports[pi];
    Orientation po = side_normal_orientation(p.side);
    double coord = po == Orientation::Vertical ? p.position.x : p.position.y;
    double across = po == Orientation::Vertical ? p.position.y : p.position.x;
    bool covered = false;
    for (size_t ri = 0; ri < channel_rep_count; ++ri) {
      const Representative& r = reps[ri];
      if (r.orient == po && nearly_equal(r.seg.fixed, coord) && r.seg.span.contains(across)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;

    bool outward_positive = p.side == Side::North || p.side == Side::East;
    double limit = po == Orientation::Vertical ? (outward_positive ? bounds.y1 : bounds.y0)
                                               : (outward_positive ? bounds.x1 : bounds.x0);
    // Boxes block the ray.
    for (size_t bi = 0; bi < boxes.size(); ++bi) {
      Rect r = boxes[bi].rect();
      Interval wide = po == Orientation::Vertical ? r.xspan() : r.yspan();
      Interval deep = po == Orientation::Vertical ? r.yspan() : r.xspan();
      if (coord <= wide.lo + kGeomEps || coord >= wide.hi - kGeomEps) continue;
      if (outward_positive) {
        if (deep.lo > across + kGeomEps) limit = std::min(limit, deep.lo);
      } else {
        if (deep.hi < across - kGeomEps) limit = std::max(limit, deep.hi);
      }
    }
    // Nearest perpendicular representative crossing strictly beyond the port.
    double best = limit;
    bool found_rep = false;
    for (size_t ri = 0; ri < channel_rep_count; ++ri) {
      const Representative& r = reps[ri];
      if (r.orient == po) continue;
      if (!r.seg.span.contains(coord)) continue;
      double hit = r.seg.fixed;
      if (outward_positive) {
        if (hit > across + kGeomEps && hit <= limit + kGeomEps && (!found_rep || hit < best)) {
          best = hit;
          found_rep = true;
        }
      } else {
        if (hit < across - kGeomEps && hit >= limit - kGeomEps && (!found_rep || hit > best)) {
          best = hit;
          found_rep = true;
        }
      }
    }
    double end = found_rep ? best : limit;
    if (std::fabs(end - across) <= kGeomEps) continue;  // nowhere to go; caught at build

    Representative stub;
    stub.orient = po;
    stub.channel = -1;
    stub.port = static_cast<int>(pi);
    stub.seg = {po, coord, {std::min(across, end), std::max(across, end)}};
    reps.push_back(stub);
  }
  return reps;
}

namespace {

struct Rail {
  Orientation orient;
  double coord;
  Interval span;
};

// Groups collinear representatives (within eps) and merges touching spans.
std::vector<Rail> merge_rails(const std::vector<Representative>& reps, Orientation orient) {
  std::vector<std::pair<double, Interval>> raw;
  for (const Representative& r : reps) {
    if (r.orient == orient) raw.push_back({r.seg.fixed, r.seg.span});
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.lo < b.second.lo;
  });
  std::vector<Rail> rails;
  size_t i = 0;
  while (i < raw.size()) {
    size_t j = i;
    double coord = raw[i].first;
    std::vector<Interval> spans;
    while (j < raw.size() && raw[j].first <= coord + kGeomEps) {
      spans.push_back(raw[j].second);
      ++j;
    }
    std::sort(spans.begin(), spans.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Interval cur = spans[0];
    for (size_t k = 1; k < spans.size(); ++k) {
      if (spans[k].lo <= cur.hi + kGeomEps) {
        cur.hi = std::max(cur.hi, spans[k].hi);
      } else {
        rails.push_back({orient, coord, cur});
        cur = spans[k];
      }
    }
    rails.push_back({orient, coord, cur});
    i = j;
  }
  return rails;
}

}  // namespace

RoutingGraph build_routing_graph(const std::vector<Representative>& reps,
                                 const std::vector<Port>& ports) {
  std::vector<Rail> vrails = merge_rails(reps, Orientation::Vertical);
  std::vector<Rail> hrails = merge_rails(reps, Orientation::Horizontal);

  RoutingGraph g;
  std::map<std::pair<long long, long long>, int> vertex_at;
  auto quant = [](double v) { return static_cast<long long>(std::llround(v * 1e7)); };
  auto vertex_id = [&](Point p, int port) {
    auto key = std::make_pair(quant(p.x), quant(p.y));
    auto it = vertex_at.find(key);
    if (it != vertex_at.end()) {
      if (port >= 0) g.verts[static_cast<size_t>(it->second)].port = port;
      return it->second;
    }
    int id = static_cast<int>(g.verts.size());
    g.verts.push_back({p, port});
    vertex_at.emplace(key, id);
    return id;
  };

  // Stations per rail: perpendicular crossings plus ports lying on the rail.
  struct Station {
    double along;
    int vertex;
  };
  auto build_rail_edges = [&](const std::vector<Rail>& rails, const std::vector<Rail>& cross) {
    for (const Rail& rail : rails) {
      bool vertical = rail.orient == Orientation::Vertical;
      std::vector<Station> st;
      for (const Rail& c : cross) {
        if (!c.span.contains(rail.coord) || !rail.span.contains(c.coord)) continue;
        Point p = vertical ? Point{rail.coord, c.coord} : Point{c.coord, rail.coord};
        st.push_back({c.coord, vertex_id(p, -1)});
      }
      for (size_t pi = 0; pi < ports.size(); ++pi) {
        const Port& p = ports[pi];
        double coord = vertical ? p.position.x : p.position.y;
        double along = vertical ? p.position.y : p.position.x;
        if (side_normal_orientation(p.side) != rail.orient) continue;
        if (!nearly_equal(coord, rail.coord) || !rail.span.contains(along)) continue;
        Point pos = vertical ? Point{rail.coord, along} : Point{along, rail.coord};
        st.push_back({along, vertex_id(pos, static_cast<int>(pi))});
      }
      std::sort(st.begin(), st.end(), [](const Station& a, const Station& b) {
        return a.along < b.along;
      });
      for (size_t k = 0; k + 1 < st.size(); ++k) {
        if (st[k + 1].vertex == st[k].vertex) continue;
        if (st[k + 1].along - st[k].along <= kGeomEps) continue;
        RoutingGraph::E e;
        e.a = st[k].vertex;
        e.b = st[k + 1].vertex;
        e.orient = rail.orient;
        e.length = st[k + 1].along - st[k].along;
        g.edges.push_back(e);
      }
    }
  };
  build_rail_edges(vrails, hrails);
  build_rail_edges(hrails, vrails);

  // Deduplicate edges (overlapping collinear representatives can repeat one).
  {
    std::set<std::pair<int, int>> seen;
    std::vector<RoutingGraph::E> uniq;
    for (const auto& e : g.edges) {
      auto key = std::minmax(e.a, e.b);
      if (seen.insert({key.first, key.second}).second) uniq.push_back(e);
    }
    g.edges = std::move(uniq);
  }

  g.incident.assign(g.verts.size(), {});
  for (int ei = 0; ei < g.M(); ++ei) {
    g.incident[static_cast<size_t>(g.edges[static_cast<size_t>(ei)].a)].push_back(ei);
    g.incident[static_cast<size_t>(g.edges[static_cast<size_t>(ei)].b)].push_back(ei);
  }

  g.port_vertex.assign(ports.size(), -1);
  for (int vi = 0; vi < static_cast<int>(g.verts.size()); ++vi) {
    int pt = g.verts[static_cast<size_t>(vi)].port;
    if (pt >= 0) g.port_vertex[static_cast<size_t>(pt)] = vi;
  }
  for (size_t pi = 0; pi < ports.size(); ++pi) {
    int vi = g.port_vertex[pi];
    if (vi < 0 || g.incident[static_cast<size_t>(vi)].empty()) {
      throw ConstructionError("port of edge endpoint cannot be routed (degree 0)");
    }
  }
  return g;
}

}  // namespace ortho
