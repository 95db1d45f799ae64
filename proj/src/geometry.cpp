#include "ortho/geometry.hpp"

namespace ortho {

SegmentIntersection segment_intersection(const OrthoSegment& a, const OrthoSegment& b,
                                         double eps) {
  if (a.orient != b.orient) {
    const OrthoSegment& h = a.orient == Orientation::Horizontal ? a : b;
    const OrthoSegment& v = a.orient == Orientation::Vertical ? a : b;
    if (h.span.contains(v.fixed, eps) && v.span.contains(h.fixed, eps)) {
      return SegmentCrossing{{v.fixed, h.fixed}};
    }
    return std::monostate{};
  }
  if (!nearly_equal(a.fixed, b.fixed, eps)) return std::monostate{};
  auto common = a.span.intersect(b.span, eps);
  if (!common) return std::monostate{};
  return SegmentOverlap{*common};
}

double rect_distance(const Rect& a, const Rect& b) {
  double dx = std::max({0.0, b.x0 - a.x1, a.x0 - b.x1});
  double dy = std::max({0.0, b.y0 - a.y1, a.y0 - b.y1});
  return std::hypot(dx, dy);
}

namespace {

Rect segment_bounds(const OrthoSegment& s) {
  if (s.orient == Orientation::Horizontal) return {s.span.lo, s.fixed, s.span.hi, s.fixed};
  return {s.fixed, s.span.lo, s.fixed, s.span.hi};
}

}  // namespace

double segment_rect_distance(const OrthoSegment& s, const Rect& r) {
  return rect_distance(segment_bounds(s), r);
}

double segment_distance(const OrthoSegment& a, const OrthoSegment& b) {
  return rect_distance(segment_bounds(a), segment_bounds(b));
}

}  // namespace ortho
