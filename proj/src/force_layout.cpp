#include "ortho/force_layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point> force_layout(const Multigraph& graph, const LayoutConfig& cfg) {
  int n = graph.n();
  if (n < 1) throw std::invalid_argument("force_layout: empty graph");
  if (cfg.iterations < 1 || cfg.ideal_edge_length <= 0.0) {
    throw std::invalid_argument("force_layout: bad config");
  }

  std::mt19937_64 rng(cfg.seed);
  double side = cfg.ideal_edge_length * std::sqrt(static_cast<double>(n));
  std::vector<Point> pos(static_cast<size_t>(n));
  for (auto& p : pos) {
    p.x = uniform01(rng) * side;
    p.y = uniform01(rng) * side;
  }
  if (n == 1) return pos;

  const double k = cfg.ideal_edge_length;
  double temp = side / 10.0;
  std::vector<Point> disp(static_cast<size_t>(n));

  for (int it = 0; it < cfg.iterations; ++it) {
    for (auto& d : disp) d = {0.0, 0.0};

    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double dx = pos[static_cast<size_t>(i)].x - pos[static_cast<size_t>(j)].x;
        double dy = pos[static_cast<size_t>(i)].y - pos[static_cast<size_t>(j)].y;
        double d = std::hypot(dx, dy);
        if (d < 1e-9) {
          // Coincident points: deterministic jitter direction by index pair.
          dx = 1e-6 * static_cast<double>(1 + ((i * 31 + j) % 7));
          dy = 1e-6 * static_cast<double>(1 + ((i * 17 + j) % 5));
          d = std::hypot(dx, dy);
        }
        double f = k * k / d;  // repulsion magnitude
        double fx = dx / d * f, fy = dy / d * f;
        disp[static_cast<size_t>(i)].x += fx;
        disp[static_cast<size_t>(i)].y += fy;
        disp[static_cast<size_t>(j)].x -= fx;
        disp[static_cast<size_t>(j)].y -= fy;
      }
    }

    for (const Edge& e : graph.edges()) {
      if (e.source == e.target) continue;
      double dx = pos[static_cast<size_t>(e.source)].x - pos[static_cast<size_t>(e.target)].x;
      double dy = pos[static_cast<size_t>(e.source)].y - pos[static_cast<size_t>(e.target)].y;
      double d = std::hypot(dx, dy);
      if (d < 1e-9) continue;
      double f = d * d / k;  // attraction magnitude
      double fx = dx / d * f, fy = dy / d * f;
      disp[static_cast<size_t>(e.source)].x -= fx;
      disp[static_cast<size_t>(e.source)].y -= fy;
      disp[static_cast<size_t>(e.target)].x += fx;
      disp[static_cast<size_t>(e.target)].y += fy;
    }

    for (int i = 0; i < n; ++i) {
      double dx = disp[static_cast<size_t>(i)].x, dy = disp[static_cast<size_t>(i)].y;
      double d = std::hypot(dx, dy);
      if (d < 1e-12) continue;
      double step = std::min(d, temp);
      pos[static_cast<size_t>(i)].x += dx / d * step;
      pos[static_cast<size_t>(i)].y += dy / d * step;
    }
    temp *= cfg.cooling;
  }

  for (const auto& p : pos) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InternalError("force_layout produced non-finite coordinates");
    }
  }
  return pos;
}

bool boxes_disjoint(const std::vector<Box>& boxes, double margin, double eps) {
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      Rect a = boxes[i].rect(), b = boxes[j].rect();
      double xgap = std::max(b.x0 - a.x1, a.x0 - b.x1);
      double ygap = std::max(b.y0 - a.y1, a.y0 - b.y1);
      if (xgap < margin - eps && ygap < margin - eps) return false;
    }
  }
  return true;
}

namespace {

// Translation distance along dir that separates the child box from the fixed
// parent box with the requested margin along at least one axis.
double grow_distance(const Box& parent, const Box& child, Point dir, double margin) {
  double need_x = (parent.width + child.width) / 2.0 + margin;
  double need_y = (parent.height + child.height) / 2.0 + margin;
  double dx = child.center.x - parent.center.x;
  double dy = child.center.y - parent.center.y;
  if (std::fabs(dx) >= need_x - kGeomEps || std::fabs(dy) >= need_y - kGeomEps) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  if (std::fabs(dir.x) > 1e-12) {
    double target = dir.x > 0 ? need_x : -need_x;
    double t = (target - dx) / dir.x;
    if (t >= 0) best = std::min(best, t);
  }
  if (std::fabs(dir.y) > 1e-12) {
    double target = dir.y > 0 ? need_y : -need_y;
    double t = (target - dy) / dir.y;
    if (t >= 0) best = std::min(best, t);
  }
  return std::isfinite(best) ? best : 0.0;
}

double overlap_depth(const Box& a, const Box& b) {
  Rect ra = a.rect(), rb = b.rect();
  double ox = std::min(ra.x1, rb.x1) - std::max(ra.x0, rb.x0);
  double oy = std::min(ra.y1, rb.y1) - std::max(ra.y0, rb.y0);
  return std::min(ox, oy);  // positive iff the boxes overlap
}

// One tree-growing round in the style of the GTree scheme: minimum spanning
// tree over box centers, heavier weight for deeper overlaps, then child
// subtrees translated outward along their tree edge until separated.
std::vector<Box> gtree_round(std::vector<Box> boxes, double margin) {
  int n = static_cast<int>(boxes.size());
  struct WEdge {
    double w;
    int a, b;
  };
  std::vector<WEdge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double depth = overlap_depth(boxes[static_cast<size_t>(i)], boxes[static_cast<size_t>(j)]);
      double dist = distance(boxes[static_cast<size_t>(i)].center, boxes[static_cast<size_t>(j)].center);
      // Overlapping pairs first (more depth = earlier), then near pairs.
      double w = depth > 0 ? -depth : dist;
      edges.push_back({w, i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const WEdge& a, const WEdge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.a != b.a) return a.a < b.a;
    return a.b < b.b;
  });
  std::vector<int> parent_uf(static_cast<size_t>(n));
  std::iota(parent_uf.begin(), parent_uf.end(), 0);
  auto find = [&](int x) {
    while (parent_uf[static_cast<size_t>(x)] != x) {
      parent_uf[static_cast<size_t>(x)] = parent_uf[static_cast<size_t>(parent_uf[static_cast<size_t>(x)])];
      x = parent_uf[static_cast<size_t>(x)];
    }
    return x;
  };
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent_uf[static_cast<size_t>(ra)] = rb;
    adj[static_cast<size_t>(e.a)].push_back(e.b);
    adj[static_cast<size_t>(e.b)].push_back(e.a);
  }

  // Root: box nearest the centroid.
  Point centroid{0, 0};
  for (const Box& b : boxes) {
    centroid.x += b.center.x;
    centroid.y += b.center.y;
  }
  centroid.x /= n;
  centroid.y /= n;
  int root = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double d = distance(boxes[static_cast<size_t>(i)].center, centroid);
    if (d < best) {
      best = d;
      root = i;
    }
  }

  // BFS top-down; each child subtree moves as a unit.
  std::vector<int> order, par(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  order.push_back(root);
  seen[static_cast<size_t>(root)] = 1;
  for (size_t h = 0; h < order.size(); ++h) {
    int u = order[h];
    std::vector<int> nb = adj[static_cast<size_t>(u)];
    std::sort(nb.begin(), nb.end());
    for (int v : nb) {
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        par[static_cast<size_t>(v)] = u;
        order.push_back(v);
      }
    }
  }

  std::vector<Point> shift(static_cast<size_t>(n), {0.0, 0.0});
  for (size_t h = 1; h < order.size(); ++h) {
    int c = order[h];
    int p = par[static_cast<size_t>(c)];
    // Accumulated shift of the parent chain applies to c as well.
    shift[static_cast<size_t>(c)].x += shift[static_cast<size_t>(p)].x;
    shift[static_cast<size_t>(c)].y += shift[static_cast<size_t>(p)].y;
    Box pb = boxes[static_cast<size_t>(p)];
    pb.center.x += shift[static_cast<size_t>(p)].x;
    pb.center.y += shift[static_cast<size_t>(p)].y;
    Box cb = boxes[static_cast<size_t>(c)];
    cb.center.x += shift[static_cast<size_t>(c)].x;
    cb.center.y += shift[static_cast<size_t>(c)].y;
    Point dir{cb.center.x - pb.center.x, cb.center.y - pb.center.y};
    double len = std::hypot(dir.x, dir.y);
    if (len < 1e-12) dir = {1.0, 0.0};
    else dir = {dir.x / len, dir.y / len};
    double t = grow_distance(pb, cb, dir, margin);
    shift[static_cast<size_t>(c)].x += dir.x * t;
    shift[static_cast<size_t>(c)].y += dir.y * t;
  }
  for (int i = 0; i < n; ++i) {
    boxes[static_cast<size_t>(i)].center.x += shift[static_cast<size_t>(i)].x;
    boxes[static_cast<size_t>(i)].center.y += shift[static_cast<size_t>(i)].y;
  }
  return boxes;
}

// Checks that pairs already separated along an axis kept their center order there.
bool axis_orders_preserved(const std::vector<Box>& before, const std::vector<Box>& after,
                           double margin) {
  int n = static_cast<int>(before.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rect a = before[static_cast<size_t>(i)].rect(), b = before[static_cast<size_t>(j)].rect();
      if (b.x0 - a.x1 >= -kGeomEps &&
          after[static_cast<size_t>(i)].center.x > after[static_cast<size_t>(j)].center.x + kGeomEps) {
        return false;
      }
      if (b.y0 - a.y1 >= -kGeomEps &&
          after[static_cast<size_t>(i)].center.y > after[static_cast<size_t>(j)].center.y + kGeomEps) {
        return false;
      }
    }
  }
  (void)margin;
  return true;
}

// Fallback: dilate all centers away from the centroid until disjoint. Keeps
// center orders along both axes by construction.
std::vector<Box> dilate_apart(std::vector<Box> boxes, double margin) {
  int n = static_cast<int>(boxes.size());
  Point centroid{0, 0};
  for (const Box& b : boxes) {
    centroid.x += b.center.x;
    centroid.y += b.center.y;
  }
  centroid.x /= n;
  centroid.y /= n;
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Box& a = boxes[static_cast<size_t>(i)];
      const Box& b = boxes[static_cast<size_t>(j)];
      double need_x = (a.width + b.width) / 2.0 + margin;
      double need_y = (a.height + b.height) / 2.0 + margin;
      double dx = std::fabs(a.center.x - b.center.x);
      double dy = std::fabs(a.center.y - b.center.y);
      if (dx >= need_x || dy >= need_y) continue;
      double s = std::numeric_limits<double>::infinity();
      if (dx > 1e-9) s = std::min(s, need_x / dx);
      if (dy > 1e-9) s = std::min(s, need_y / dy);
      if (std::isfinite(s)) scale = std::max(scale, s * (1.0 + 1e-9));
    }
  }
  for (Box& b : boxes) {
    b.center.x = centroid.x + (b.center.x - centroid.x) * scale;
    b.center.y = centroid.y + (b.center.y - centroid.y) * scale;
  }
  return boxes;
}

}  // namespace

std::vector<Box> remove_overlaps(const std::vector<Box>& input, double margin) {
  if (input.empty()) return {};
  for (const Box& b : input) {
    if (!std::isfinite(b.center.x) || !std::isfinite(b.center.y)) {
      throw std::invalid_argument("remove_overlaps: non-finite coordinates");
    }
  }
  std::vector<Box> boxes = input;
  if (boxes.size() == 1) return boxes;

  // Coincident centers: nudge the later index so directions are defined.
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      if (nearly_equal(boxes[i].center.x, boxes[j].center.x) &&
          nearly_equal(boxes[i].center.y, boxes[j].center.y)) {
        boxes[j].center.x += 1e-6 * static_cast<double>(j - i);
      }
    }
  }

  std::vector<Box> cur = boxes;
  for (int round = 0; round < 64; ++round) {
    if (boxes_disjoint(cur, margin)) break;
    cur = gtree_round(std::move(cur), margin);
  }
  if (!boxes_disjoint(cur, margin) || !axis_orders_preserved(input, cur, margin)) {
    cur = dilate_apart(boxes, margin);
  }
  return cur;
}

}  // namespace ortho
