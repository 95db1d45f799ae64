#include <doctest.h>

#include <cmath>
#include <random>

#include "ortho/force_layout.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("force_layout");

namespace {

Multigraph pair_graph() {
  Multigraph g;
  g.add_vertex({"a", {}, {}, {}});
  g.add_vertex({"b", {}, {}, {}});
  g.add_edge({"e", 0, 1});
  return g;
}

Box box_at(double cx, double cy, double w, double h) {
  Box b;
  b.center = {cx, cy};
  b.width = w;
  b.height = h;
  b.original_width = w;
  b.original_height = h;
  return b;
}

}  // namespace

TEST_CASE("empty graph is rejected") {
  Multigraph g;
  LayoutConfig cfg;
  CHECK_THROWS_AS(force_layout(g, cfg), std::invalid_argument);
}

TEST_CASE("single vertex stays at its initial position") {
  Multigraph g;
  g.add_vertex({"a", {}, {}, {}});
  LayoutConfig cfg;
  cfg.seed = 9;
  auto p1 = force_layout(g, cfg);
  cfg.iterations = 1;
  auto p2 = force_layout(g, cfg);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].x == p2[0].x);  // no forces act, iteration count is irrelevant
  CHECK(p1[0].y == p2[0].y);
}

TEST_CASE("an isolated pair settles near the ideal edge length") {
  Multigraph g = pair_graph();
  LayoutConfig cfg;
  cfg.ideal_edge_length = 100.0;
  cfg.iterations = 1000;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    cfg.seed = seed;
    auto pos = force_layout(g, cfg);
    double d = distance(pos[0], pos[1]);
    CHECK(d == doctest::Approx(100.0).epsilon(0.05));
  }
}

TEST_CASE("same seed gives bitwise-identical positions") {
  Multigraph g = pair_graph();
  g.add_vertex({"c", {}, {}, {}});
  g.add_edge({"f", 1, 2});
  LayoutConfig cfg;
  cfg.seed = 77;
  auto p1 = force_layout(g, cfg);
  auto p2 = force_layout(g, cfg);
  REQUIRE(p1.size() == p2.size());
  for (size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1[i].x == p2[i].x);
    CHECK(p1[i].y == p2[i].y);
  }
}

TEST_CASE("self-loops exert no force") {
  Multigraph g;
  g.add_vertex({"a", {}, {}, {}});
  g.add_vertex({"b", {}, {}, {}});
  Multigraph g2;
  g2.add_vertex({"a", {}, {}, {}});
  g2.add_vertex({"b", {}, {}, {}});
  g2.add_edge({"loop", 0, 0});
  LayoutConfig cfg;
  cfg.seed = 5;
  cfg.iterations = 50;
  auto p1 = force_layout(g, cfg);
  auto p2 = force_layout(g2, cfg);
  for (size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1[i].x == p2[i].x);
    CHECK(p1[i].y == p2[i].y);
  }
}

TEST_CASE("finite coordinates on a connected clump") {
  Multigraph g;
  for (int i = 0; i < 12; ++i) g.add_vertex({"v" + std::to_string(i), {}, {}, {}});
  for (int i = 1; i < 12; ++i) g.add_edge({"e" + std::to_string(i), i - 1, i});
  LayoutConfig cfg;
  cfg.seed = 3;
  auto pos = force_layout(g, cfg);
  for (const Point& p : pos) {
    CHECK(std::isfinite(p.x));
    CHECK(std::isfinite(p.y));
  }
}

TEST_CASE("disjoint input is a fixed point of overlap removal") {
  std::vector<Box> boxes = {box_at(0, 0, 10, 10), box_at(40, 0, 10, 10)};
  auto out = remove_overlaps(boxes, 12.0);
  CHECK(out[0].center.x == boxes[0].center.x);
  CHECK(out[1].center.x == boxes[1].center.x);
  CHECK(out[0].center.y == boxes[0].center.y);
}

TEST_CASE("coincident identical boxes are pushed to exactly the margin") {
  std::vector<Box> boxes = {box_at(5, 5, 10, 10), box_at(5, 5, 10, 10)};
  double margin = 7.0;
  auto out = remove_overlaps(boxes, margin);
  REQUIRE(boxes_disjoint(out, margin, 1e-6));
  // Geometric oracle: gap along some axis equals the margin.
  Rect a = out[0].rect(), b = out[1].rect();
  double xgap = std::max(b.x0 - a.x1, a.x0 - b.x1);
  double ygap = std::max(b.y0 - a.y1, a.y0 - b.y1);
  CHECK(std::max(xgap, ygap) == doctest::Approx(margin).epsilon(1e-6));
  CHECK(out[0].width == doctest::Approx(10));
  CHECK(out[1].height == doctest::Approx(10));
}

TEST_CASE("random overlapping boxes come out disjoint (brute-force check)") {
  std::mt19937_64 rng(11);
  auto u = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Box> boxes;
    for (int i = 0; i < 20; ++i) {
      boxes.push_back(box_at(u(0, 120), u(0, 120), u(8, 40), u(8, 40)));
    }
    double margin = 6.0;
    auto out = remove_overlaps(boxes, margin);
    REQUIRE(out.size() == boxes.size());
    CHECK(boxes_disjoint(out, margin, 1e-6));  // O(n^2) disjointness oracle
    for (size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i].width == doctest::Approx(boxes[i].width));
      CHECK(out[i].height == doctest::Approx(boxes[i].height));
    }
    // Idempotence.
    auto again = remove_overlaps(out, margin);
    for (size_t i = 0; i < out.size(); ++i) {
      CHECK(again[i].center.x == doctest::Approx(out[i].center.x).epsilon(1e-12));
      CHECK(again[i].center.y == doctest::Approx(out[i].center.y).epsilon(1e-12));
    }
    // Pairs already separated along an axis keep their center order there.
    for (size_t i = 0; i < out.size(); ++i) {
      for (size_t j = 0; j < out.size(); ++j) {
        if (i == j) continue;
        Rect bi = boxes[i].rect(), bj = boxes[j].rect();
        if (bj.x0 - bi.x1 >= 0) CHECK(out[i].center.x <= out[j].center.x + 1e-9);
        if (bj.y0 - bi.y1 >= 0) CHECK(out[i].center.y <= out[j].center.y + 1e-9);
      }
    }
  }
}

TEST_SUITE_END();
