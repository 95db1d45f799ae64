#include <doctest.h>

#include <cmath>
#include <vector>

#include "ortho/geometry.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("perpendicular segments meet in a point") {
  OrthoSegment v{Orientation::Vertical, 2.0, {0.0, 4.0}};
  OrthoSegment h{Orientation::Horizontal, 1.0, {0.0, 5.0}};
  auto res = segment_intersection(v, h);
  REQUIRE(std::holds_alternative<SegmentCrossing>(res));
  Point p = std::get<SegmentCrossing>(res).at;
  CHECK(p.x == doctest::Approx(2.0));
  CHECK(p.y == doctest::Approx(1.0));
}

TEST_CASE("perpendicular segments out of range do not meet") {
  OrthoSegment v{Orientation::Vertical, 2.0, {0.0, 4.0}};
  OrthoSegment h{Orientation::Horizontal, 9.0, {0.0, 5.0}};
  CHECK(std::holds_alternative<std::monostate>(segment_intersection(v, h)));
}

TEST_CASE("parallel segments overlap in an interval") {
  OrthoSegment a{Orientation::Horizontal, 3.0, {0.0, 4.0}};
  OrthoSegment b{Orientation::Horizontal, 3.0, {2.0, 8.0}};
  auto res = segment_intersection(a, b);
  REQUIRE(std::holds_alternative<SegmentOverlap>(res));
  CHECK(std::get<SegmentOverlap>(res).along.lo == doctest::Approx(2.0));
  CHECK(std::get<SegmentOverlap>(res).along.hi == doctest::Approx(4.0));
}

TEST_CASE("intersection is symmetric in its arguments") {
  std::vector<OrthoSegment> segs = {
      {Orientation::Vertical, 1.0, {0.0, 3.0}},   {Orientation::Vertical, 2.5, {1.0, 2.0}},
      {Orientation::Horizontal, 2.0, {0.0, 2.0}}, {Orientation::Horizontal, 2.0, {1.5, 4.0}},
      {Orientation::Horizontal, 5.0, {0.0, 1.0}},
  };
  for (const auto& a : segs) {
    for (const auto& b : segs) {
      auto r1 = segment_intersection(a, b);
      auto r2 = segment_intersection(b, a);
      CHECK(r1.index() == r2.index());
      if (std::holds_alternative<SegmentCrossing>(r1)) {
        CHECK(std::get<SegmentCrossing>(r1).at.x ==
              doctest::Approx(std::get<SegmentCrossing>(r2).at.x));
        CHECK(std::get<SegmentCrossing>(r1).at.y ==
              doctest::Approx(std::get<SegmentCrossing>(r2).at.y));
      }
    }
  }
}

TEST_CASE("distances between axis-aligned objects") {
  CHECK(rect_distance({0, 0, 1, 1}, {3, 0, 4, 1}) == doctest::Approx(2.0));
  CHECK(rect_distance({0, 0, 1, 1}, {2, 2, 3, 3}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(rect_distance({0, 0, 2, 2}, {1, 1, 3, 3}) == doctest::Approx(0.0));
  OrthoSegment s{Orientation::Horizontal, 5.0, {0.0, 2.0}};
  CHECK(segment_rect_distance(s, {0, 0, 2, 2}) == doctest::Approx(3.0));
  OrthoSegment t{Orientation::Vertical, 4.0, {6.0, 9.0}};
  CHECK(segment_distance(s, t) == doctest::Approx(std::hypot(2.0, 1.0)));
}

TEST_SUITE_END();
