#include <doctest.h>

#include <vector>

#include "ortho/path_ordering.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("path_ordering");

namespace {

RoutingGraph make_grid(int w, int h) {
  RoutingGraph g;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      g.verts.push_back({{static_cast<double>(x), static_cast<double>(y)}, -1});
    }
  }
  auto vid = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) {
        g.edges.push_back({vid(x, y), vid(x + 1, y), Orientation::Horizontal, 1.0});
      }
      if (y + 1 < h) {
        g.edges.push_back({vid(x, y), vid(x, y + 1), Orientation::Vertical, 1.0});
      }
    }
  }
  g.incident.assign(g.verts.size(), {});
  for (int ei = 0; ei < g.M(); ++ei) {
    g.incident[static_cast<size_t>(g.edges[static_cast<size_t>(ei)].a)].push_back(ei);
    g.incident[static_cast<size_t>(g.edges[static_cast<size_t>(ei)].b)].push_back(ei);
  }
  return g;
}

}  // namespace

TEST_CASE("a path leaving a horizontal fork upwards is ordered on top") {
  // Paths a and b share the horizontal run (1,1)-(3,1); at the left fork
  // vertex (1,1), a leaves to the top and must be ordered above b.
  RoutingGraph g = make_grid(5, 3);
  auto vid = [&](int x, int y) { return y * 5 + x; };
  EdgePath a, b;
  a.edge = 0;
  b.edge = 1;
  a.verts = {vid(1, 2), vid(1, 1), vid(2, 1), vid(3, 1), vid(4, 1)};
  b.verts = {vid(0, 1), vid(1, 1), vid(2, 1), vid(3, 1), vid(3, 0)};
  BundleOrder order = order_paths(g, {a, b});
  for (int x = 1; x < 3; ++x) {
    auto key = hedge_key(vid(x, 1), vid(x + 1, 1));
    auto before = order.before(0, 1, key);
    REQUIRE(before.has_value());
    CHECK(*before);  // horizontal bundles are ordered top to bottom
  }
}

TEST_CASE("vertical bundles are ordered left to right by the bottom fork") {
  // Both paths run up column 2; p exits the bottom fork to the west, q to the
  // east, so p is the left one.
  RoutingGraph g = make_grid(5, 4);
  auto vid = [&](int x, int y) { return y * 5 + x; };
  EdgePath p, q;
  p.edge = 0;
  q.edge = 1;
  p.verts = {vid(0, 0), vid(1, 0), vid(2, 0), vid(2, 1), vid(2, 2), vid(2, 3)};
  q.verts = {vid(4, 0), vid(3, 0), vid(2, 0), vid(2, 1), vid(2, 2), vid(1, 2)};
  BundleOrder order = order_paths(g, {p, q});
  auto key = hedge_key(vid(2, 0), vid(2, 1));
  auto before = order.before(0, 1, key);
  REQUIRE(before.has_value());
  CHECK(*before);  // p exits the bottom fork west of the bundle, so p is left
}

TEST_CASE("identical end orders give zero crossings, differing give one") {
  RoutingGraph g = make_grid(5, 4);
  auto vid = [&](int x, int y) { return y * 5 + x; };

  // Nested pair: both enter from the west and leave to the west; orders at
  // the two ends of the shared run agree, so no crossing.
  EdgePath a, b;
  a.edge = 0;
  b.edge = 1;
  a.verts = {vid(0, 0), vid(1, 0), vid(1, 1), vid(1, 2), vid(0, 2)};
  b.verts = {vid(0, 1), vid(1, 1), vid(1, 2), vid(1, 3), vid(0, 3)};
  CHECK(path_crossings(g, a, b) == 0);

  // Swapping pair: enter from opposite sides, leave to opposite sides.
  EdgePath c, d;
  c.edge = 2;
  d.edge = 3;
  c.verts = {vid(0, 0), vid(1, 0), vid(1, 1), vid(1, 2), vid(2, 2)};
  d.verts = {vid(2, 0), vid(1, 0), vid(1, 1), vid(1, 2), vid(0, 2)};
  CHECK(path_crossings(g, c, d) == 1);

  BundleOrder order = order_paths(g, {a, b, c, d});
  MlcmCheckResult res = check_mlcm_property(g, {a, b, c, d}, order);
  CHECK(res.ok);
  CHECK(res.pairs_sharing >= 2);
}

TEST_CASE("join_collinear merges runs and drops zero-length segments") {
  std::vector<Point> pts = {{0, 0}, {4, 0}, {9, 0}, {9, 3}};
  auto out = join_collinear(pts);
  REQUIRE(out.size() == 3);
  CHECK(out[1].x == doctest::Approx(9.0));
  CHECK(out[1].y == doctest::Approx(0.0));

  // H, V(len 0), H collapses to a single horizontal segment: two bends gone.
  std::vector<Point> degen = {{0, 0}, {4, 0}, {4, 0}, {9, 0}};
  auto out2 = join_collinear(degen);
  REQUIRE(out2.size() == 2);
  CHECK(out2[0] == Point{0, 0});
  CHECK(out2[1] == Point{9, 0});

  // Already alternating input is a fixed point.
  std::vector<Point> alt = {{0, 0}, {3, 0}, {3, 2}, {5, 2}};
  CHECK(join_collinear(alt) == alt);
}

TEST_CASE("order is constant along a shared straight run") {
  RoutingGraph g = make_grid(6, 3);
  auto vid = [&](int x, int y) { return y * 6 + x; };
  EdgePath a, b, c;
  a.edge = 0;
  b.edge = 1;
  c.edge = 2;
  a.verts = {vid(0, 0), vid(1, 0), vid(2, 0), vid(3, 0), vid(4, 0), vid(5, 0)};
  b.verts = {vid(0, 1), vid(1, 1), vid(1, 0), vid(2, 0), vid(3, 0), vid(4, 0), vid(4, 1)};
  c.verts = {vid(2, 1), vid(2, 0), vid(3, 0), vid(3, 1)};
  BundleOrder order = order_paths(g, {a, b, c});
  MlcmCheckResult res = check_mlcm_property(g, {a, b, c}, order);
  CHECK(res.ok);
}

TEST_SUITE_END();
