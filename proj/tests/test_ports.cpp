#include <doctest.h>

#include <cmath>
#include <set>

#include "ortho/ports.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("ports");

namespace {

Box box_at(double cx, double cy, double w, double h) {
  Box b;
  b.center = {cx, cy};
  b.width = w;
  b.height = h;
  b.original_width = w;
  b.original_height = h;
  return b;
}

bool on_side(const Box& b, Side s, const Point& p) {
  Rect r = b.rect();
  switch (s) {
    case Side::North: return nearly_equal(p.y, r.y1) && p.x > r.x0 && p.x < r.x1;
    case Side::South: return nearly_equal(p.y, r.y0) && p.x > r.x0 && p.x < r.x1;
    case Side::East: return nearly_equal(p.x, r.x1) && p.y > r.y0 && p.y < r.y1;
    case Side::West: return nearly_equal(p.x, r.x0) && p.y > r.y0 && p.y < r.y1;
  }
  return false;
}

}  // namespace

TEST_CASE("facing boxes get facing midpoint ports") {
  Multigraph g;
  g.add_vertex({"u", {}, {}, {}});
  g.add_vertex({"v", {}, {}, {}});
  g.add_edge({"e", 0, 1});
  std::vector<Box> boxes = {box_at(0, 0, 2, 2), box_at(10, 0, 2, 2)};
  PortAssignment pa = assign_ports(g, boxes);
  const Port& pu = pa.port(0, 0);
  const Port& pv = pa.port(0, 1);
  CHECK(pu.side == Side::East);
  CHECK(pu.position.x == doctest::Approx(1.0));
  CHECK(pu.position.y == doctest::Approx(0.0));
  CHECK(pv.side == Side::West);
  CHECK(pv.position.x == doctest::Approx(9.0));
  CHECK(pv.position.y == doctest::Approx(0.0));
}

TEST_CASE("quarter rule moves the steeper port around the corner") {
  // s_uv exits u's east side at (1, 0.6): fraction 0.8 > 0.75, so u's port is
  // reassigned to the north side (the L bends away from the barycenter).
  Multigraph g;
  g.add_vertex({"u", {}, {}, {}});
  g.add_vertex({"v", {}, {}, {}});
  g.add_edge({"e", 0, 1});
  std::vector<Box> boxes = {box_at(0, 0, 2, 2), box_at(10, 6, 2, 2)};
  double fraction = (0.6 - (-1.0)) / 2.0;  // analytic crossing fraction
  CHECK(fraction == doctest::Approx(0.8));
  PortAssignment pa = assign_ports(g, boxes);
  CHECK(pa.port(0, 0).side == Side::North);
  CHECK(on_side(boxes[0], Side::North, pa.port(0, 0).position));
  CHECK(pa.port(0, 1).side == Side::West);
}

TEST_CASE("self-loop on an isolated vertex uses the north side") {
  Multigraph g;
  g.add_vertex({"u", {}, {}, {}});
  g.add_edge({"loop", 0, 0});
  std::vector<Box> boxes = {box_at(0, 0, 12, 38)};
  PortAssignment pa = assign_ports(g, boxes);
  const Port& p0 = pa.port(0, 0);
  const Port& p1 = pa.port(0, 1);
  CHECK(p0.side == Side::North);
  CHECK(p1.side == Side::North);
  auto& order = pa.side_order.at({0, Side::North});
  REQUIRE(order.size() == 2);
  // Adjacent in the side order.
  CHECK(((order[0] == 0 && order[1] == 1) || (order[0] == 1 && order[1] == 0)));
}

TEST_CASE("ports lie on their side, pairwise distinct, quarter respected") {
  Multigraph g;
  for (int i = 0; i < 5; ++i) g.add_vertex({"v" + std::to_string(i), {}, {}, {}});
  int eid = 0;
  auto edge = [&](int a, int b) { g.add_edge({"e" + std::to_string(eid++), a, b}); };
  edge(0, 1);
  edge(0, 2);
  edge(0, 3);
  edge(0, 4);
  edge(1, 2);
  edge(3, 4);
  edge(2, 2);  // self-loop
  std::vector<Box> boxes = {box_at(0, 0, 20, 20), box_at(60, 0, 20, 20),
                            box_at(0, 70, 20, 20), box_at(-60, -10, 20, 20),
                            box_at(10, -80, 20, 20)};
  PortAssignment pa = assign_ports(g, boxes);

  std::set<std::pair<double, double>> positions;
  for (const Port& p : pa.ports) {
    const Box& b = boxes[static_cast<size_t>(p.vertex)];
    CHECK(on_side(b, p.side, p.position));
    CHECK(positions.insert({p.position.x, p.position.y}).second);  // no duplicates
  }
}

TEST_CASE("parallel edges run straight without crossing each other") {
  Multigraph g;
  g.add_vertex({"u", {}, {}, {}});
  g.add_vertex({"v", {}, {}, {}});
  g.add_edge({"e0", 0, 1});
  g.add_edge({"e1", 0, 1});
  g.add_edge({"e2", 0, 1});
  std::vector<Box> boxes = {box_at(0, 0, 10, 30), box_at(50, 0, 10, 30)};
  PortAssignment pa = assign_ports(g, boxes);
  // All ports on facing sides; matching y per edge means straight parallels.
  for (int e = 0; e < 3; ++e) {
    CHECK(pa.port(e, 0).side == Side::East);
    CHECK(pa.port(e, 1).side == Side::West);
    CHECK(pa.port(e, 0).position.y == doctest::Approx(pa.port(e, 1).position.y));
  }
  // Consecutive ranks on both sides.
  auto& at_u = pa.side_order.at({0, Side::East});
  auto& at_v = pa.side_order.at({1, Side::West});
  REQUIRE(at_u.size() == 3);
  REQUIRE(at_v.size() == 3);
}

TEST_CASE("overlapping boxes are rejected") {
  Multigraph g;
  g.add_vertex({"u", {}, {}, {}});
  g.add_vertex({"v", {}, {}, {}});
  g.add_edge({"e", 0, 1});
  std::vector<Box> boxes = {box_at(0, 0, 10, 10), box_at(4, 0, 10, 10)};
  CHECK_THROWS_AS(assign_ports(g, boxes), std::invalid_argument);
}

TEST_SUITE_END();
