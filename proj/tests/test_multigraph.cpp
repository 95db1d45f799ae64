#include <doctest.h>

#include <stdexcept>

#include "ortho/multigraph.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("multigraph");

namespace {

Multigraph two_vertices() {
  Multigraph g;
  g.add_vertex({"a", {}, {}, {}});
  g.add_vertex({"b", {}, {}, {}});
  return g;
}

}  // namespace

TEST_CASE("ids must be unique and endpoints valid") {
  Multigraph g = two_vertices();
  CHECK_THROWS_AS(g.add_vertex({"a", {}, {}, {}}), std::invalid_argument);
  CHECK(g.add_edge({"e0", 0, 1}) == 0);
  CHECK_THROWS_AS(g.add_edge({"e0", 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge({"e1", 0, 7}), std::invalid_argument);
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
}

TEST_CASE("degree counts self-loops twice") {
  Multigraph g = two_vertices();
  g.add_edge({"e0", 0, 1});
  g.add_edge({"loop", 0, 0});
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
  CHECK(g.is_self_loop(1));
  CHECK_FALSE(g.is_self_loop(0));
}

TEST_CASE("empty label keeps the base box") {
  Box b = box_from_label("", 12, 38, 8, 18, 0);
  CHECK(b.width == doctest::Approx(12));
  CHECK(b.height == doctest::Approx(38));
  CHECK(b.original_width == doctest::Approx(12));
  CHECK(b.original_height == doctest::Approx(38));
}

TEST_CASE("labels widen the box only horizontally") {
  Box b = box_from_label("AB", 12, 38, 8, 18, 0);
  CHECK(b.width >= 16.0);
  CHECK(b.height == doctest::Approx(38));
}

TEST_CASE("port budget widens the box") {
  // Oracle from the even-spacing rule: a side of length L carries p ports iff
  // L/(p+1) >= gap. Height 38 and gap 18 give one port per vertical side, so
  // ten ports need four per horizontal side: width >= 18 * 5 = 90.
  const double gap = 18.0;
  auto side_capacity = [&](double len) {
    int p = 0;
    while (len / (p + 2) >= gap) ++p;
    return p;
  };
  CHECK(side_capacity(38) == 1);
  CHECK(side_capacity(90) == 4);

  Box b = box_from_label("", 12, 38, 8, gap, 10);
  CHECK(b.height == doctest::Approx(38));
  int capacity = 2 * side_capacity(b.width) + 2 * side_capacity(b.height);
  CHECK(capacity >= 10);
  CHECK(b.width == doctest::Approx(90));
}

TEST_CASE("box growth keeps the recorded original size") {
  Box b = box_from_label("wide label", 12, 38, 8, 18, 4);
  CHECK(b.width >= b.original_width - kGeomEps);
  CHECK(b.height >= b.original_height - kGeomEps);
  // Growing via from_rect preserves the originals.
  Rect r = b.rect().inflated(5.0);
  Box grown = Box::from_rect(r, b.original_width, b.original_height);
  CHECK(grown.width >= grown.original_width);
  CHECK(grown.height >= grown.original_height);
}

TEST_CASE("invalid base dimensions are rejected") {
  CHECK_THROWS_AS(box_from_label("x", 0, 38, 8, 18, 0), std::invalid_argument);
  CHECK_THROWS_AS(box_from_label("x", 12, -1, 8, 18, 0), std::invalid_argument);
  CHECK_THROWS_AS(box_from_label("x", 12, 38, 8, 18, -2), std::invalid_argument);
}

TEST_SUITE_END();
