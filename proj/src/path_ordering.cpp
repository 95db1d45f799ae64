#include "ortho/path_ordering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ortho/errors.hpp"

namespace ortho {

std::optional<bool> BundleOrder::before(int path_a, int path_b, const HEdgeKey& key) const {
  auto it = order.find(key);
  if (it == order.end()) return std::nullopt;
  int ia = -1, ib = -1;
  for (int k = 0; k < static_cast<int>(it->second.size()); ++k) {
    if (it->second[static_cast<size_t>(k)] == path_a) ia = k;
    if (it->second[static_cast<size_t>(k)] == path_b) ib = k;
  }
  if (ia < 0 || ib < 0) return std::nullopt;
  return ia < ib;
}

namespace {

// Walks a path from a bundle edge in a fixed spatial direction, emitting one
// rank token per step: 0 = turns right of travel, 1 = straight or path ends,
// 2 = turns left (mirrored for reverse walks). Two paths compare equal while
// they share edges, so lexicographic token comparison realizes the fork rule.
struct Walk {
  const RoutingGraph* h = nullptr;
  const EdgePath* path = nullptr;
  int idx = -1;   // current vertex position within the path
  int step = 0;   // +1 or -1 along the vertex sequence
  Dir travel = Dir::None;
  bool alive = true;

  int current_vertex() const { return path->verts[static_cast<size_t>(idx)]; }

  // The hedge the walk would traverse next, or (-1,-1) at the path end.
  HEdgeKey next_edge() const {
    int j = idx + step;
    if (j < 0 || j >= static_cast<int>(path->verts.size())) return {-1, -1};
    return hedge_key(current_vertex(), path->verts[static_cast<size_t>(j)]);
  }

  int token(bool mirror) const {
    int j = idx + step;
    if (j < 0 || j >= static_cast<int>(path->verts.size())) return 1;  // terminates
    Dir d = direction_between(h->verts[static_cast<size_t>(current_vertex())].p,
                              h->verts[static_cast<size_t>(path->verts[static_cast<size_t>(j)])].p);
    int side = turn_side(travel, d);  // -1 left, 0 straight, +1 right
    int rank = side == 0 ? 1 : (side > 0 ? 0 : 2);
    return mirror ? 2 - rank : rank;
  }

  void advance() {
    int j = idx + step;
    if (j < 0 || j >= static_cast<int>(path->verts.size())) {
      alive = false;
      return;
    }
    travel = direction_between(
        h->verts[static_cast<size_t>(current_vertex())].p,
        h->verts[static_cast<size_t>(path->verts[static_cast<size_t>(j)])].p);
    idx = j;
  }
};

// Positions a walk so that it stands on the scan-side endpoint of `key`
// looking onwards. scan_forward=false mirrors the direction.
Walk make_walk(const RoutingGraph& h, const EdgePath& p, const HEdgeKey& key, int at_a, int at_b,
               bool downstream) {
  const Point& pa = h.verts[static_cast<size_t>(key.first)].p;
  const Point& pb = h.verts[static_cast<size_t>(key.second)].p;
  Dir d_ab = direction_between(pa, pb);
  bool vertical = !is_horizontal(d_ab);
  // Preassigned scan: down for vertical edges, left for horizontal ones.
  bool a_is_head;
  if (vertical) {
    a_is_head = pa.y < pb.y;
  } else {
    a_is_head = pa.x < pb.x;
  }
  if (!downstream) a_is_head = !a_is_head;

  Walk w;
  w.h = &h;
  w.path = &p;
  int head_idx = a_is_head ? at_a : at_b;
  int tail_idx = a_is_head ? at_b : at_a;
  w.idx = head_idx;
  w.step = head_idx > tail_idx ? 1 : -1;
  w.travel = direction_between(h.verts[static_cast<size_t>(p.verts[static_cast<size_t>(tail_idx)])].p,
                               h.verts[static_cast<size_t>(p.verts[static_cast<size_t>(head_idx)])].p);
  return w;
}

struct PathOnEdge {
  int path = -1;
  int at_a = -1;  // index of key.first within the path
  int at_b = -1;
};

// Fork-rule comparison of two paths sharing a bundle edge.
bool bundle_less(const RoutingGraph& h, const std::vector<EdgePath>& paths, const HEdgeKey& key,
                 const PathOnEdge& pa, const PathOnEdge& pb) {
  for (bool downstream : {true, false}) {
    Walk wp = make_walk(h, paths[static_cast<size_t>(pa.path)], key, pa.at_a, pa.at_b, downstream);
    Walk wq = make_walk(h, paths[static_cast<size_t>(pb.path)], key, pb.at_a, pb.at_b, downstream);
    while (true) {
      int tp = wp.token(!downstream);
      int tq = wq.token(!downstream);
      if (tp != tq) return tp < tq;
      HEdgeKey ep = wp.next_edge();
      HEdgeKey eq = wq.next_edge();
      if (ep != eq || ep.first < 0) break;  // diverged with equal tokens or both ended
      wp.advance();
      wq.advance();
      if (!wp.alive || !wq.alive) break;
    }
  }
  return pa.path < pb.path;
}

}  // namespace

BundleOrder order_paths(const RoutingGraph& h, const std::vector<EdgePath>& paths) {
  // Occurrence lists per hedge.
  std::map<HEdgeKey, std::vector<PathOnEdge>> on_edge;
  for (int pi = 0; pi < static_cast<int>(paths.size()); ++pi) {
    const EdgePath& p = paths[static_cast<size_t>(pi)];
    std::set<int> seen;
    for (int v : p.verts) {
      if (!seen.insert(v).second) {
        throw std::invalid_argument("order_paths: path is not simple");
      }
    }
    for (int k = 0; k + 1 < static_cast<int>(p.verts.size()); ++k) {
      int a = p.verts[static_cast<size_t>(k)];
      int b = p.verts[static_cast<size_t>(k + 1)];
      HEdgeKey key = hedge_key(a, b);
      PathOnEdge poe;
      poe.path = pi;
      poe.at_a = key.first == a ? k : k + 1;
      poe.at_b = key.first == a ? k + 1 : k;
      on_edge[key].push_back(poe);
    }
  }

  BundleOrder out;
  for (auto& [key, list] : on_edge) {
    std::sort(list.begin(), list.end(), [&](const PathOnEdge& a, const PathOnEdge& b) {
      if (a.path == b.path) return false;
      return bundle_less(h, paths, key, a, b);
    });
    std::vector<int>& order = out.order[key];
    order.reserve(list.size());
    for (const PathOnEdge& poe : list) order.push_back(poe.path);
  }
  return out;
}

std::vector<int> join_collinear_keep_indices(const std::vector<Point>& pts) {
  std::vector<int> keep;
  auto same_point = [&](int a, int b) {
    return nearly_equal(pts[static_cast<size_t>(a)].x, pts[static_cast<size_t>(b)].x) &&
           nearly_equal(pts[static_cast<size_t>(a)].y, pts[static_cast<size_t>(b)].y);
  };
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (keep.empty() || !same_point(keep.back(), i)) keep.push_back(i);
  }
  if (keep.size() <= 2) return keep;

  for (;;) {
    std::vector<int> out;
    out.push_back(keep.front());
    for (size_t i = 1; i + 1 < keep.size(); ++i) {
      const Point& a = pts[static_cast<size_t>(out.back())];
      const Point& b = pts[static_cast<size_t>(keep[i])];
      const Point& c = pts[static_cast<size_t>(keep[i + 1])];
      bool collinear = (nearly_equal(a.y, b.y) && nearly_equal(b.y, c.y)) ||
                       (nearly_equal(a.x, b.x) && nearly_equal(b.x, c.x));
      if (!collinear) out.push_back(keep[i]);
    }
    out.push_back(keep.back());
    bool done = out.size() == keep.size();
    keep = std::move(out);
    if (done) break;  // collapsing can create new collinear triples; iterate
  }
  return keep;
}

std::vector<Point> join_collinear(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (int i : join_collinear_keep_indices(pts)) out.push_back(pts[static_cast<size_t>(i)]);
  return out;
}

MlcmCheckResult check_mlcm_property(const RoutingGraph& h, const std::vector<EdgePath>& paths,
                                    const BundleOrder& order) {
  MlcmCheckResult res;
  int n = static_cast<int>(paths.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const EdgePath& p = paths[static_cast<size_t>(i)];
      const EdgePath& q = paths[static_cast<size_t>(j)];
      auto runs = path_shared_runs(p, q);
      bool shares_edge = false;
      for (const SharedRun& run : runs) {
        if (run.p_end > run.p_begin) shares_edge = true;
      }
      if (shares_edge) ++res.pairs_sharing;

      for (const SharedRun& run : runs) {
        if (run.p_end <= run.p_begin) continue;
        // Order must be constant along the run's edges.
        std::optional<bool> first_before;
        for (int k = run.p_begin; k < run.p_end; ++k) {
          HEdgeKey key = hedge_key(p.verts[static_cast<size_t>(k)],
                                   p.verts[static_cast<size_t>(k + 1)]);
          auto b = order.before(i, j, key);
          if (!b) {
            res.ok = false;
            res.detail = "bundle order misses a shared edge";
            continue;
          }
          if (!first_before) {
            first_before = b;
          } else if (*first_before != *b) {
            res.ok = false;
            res.detail = "bundle order flips inside a shared subpath";
          }
        }
      }
      res.unavoidable_crossings += path_crossings(h, p, q);
    }
  }
  return res;
}

}  // namespace ortho
