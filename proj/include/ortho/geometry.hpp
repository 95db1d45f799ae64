#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <variant>

namespace ortho {

// All geometric comparisons in this project use one absolute tolerance.
inline constexpr double kGeomEps = 1e-9;

inline bool nearly_equal(double a, double b, double eps = kGeomEps) {
  return std::fabs(a - b) <= eps;
}

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double v, double eps = kGeomEps) const {
    return v >= lo - eps && v <= hi + eps;
  }
  bool overlaps(const Interval& o, double eps = kGeomEps) const {
    return lo <= o.hi + eps && o.lo <= hi + eps;
  }
  std::optional<Interval> intersect(const Interval& o, double eps = kGeomEps) const {
    double a = std::max(lo, o.lo);
    double b = std::min(hi, o.hi);
    if (a > b + eps) return std::nullopt;
    return Interval{a, std::max(a, b)};
  }
};

enum class Orientation { Horizontal, Vertical };

inline Orientation perpendicular(Orientation o) {
  return o == Orientation::Horizontal ? Orientation::Vertical : Orientation::Horizontal;
}

// Axis-aligned segment. A horizontal segment's fixed coordinate is its y,
// a vertical segment's is its x; the span runs along the other axis.
struct OrthoSegment {
  Orientation orient = Orientation::Horizontal;
  double fixed = 0.0;
  Interval span;

  Point low_end() const {
    return orient == Orientation::Horizontal ? Point{span.lo, fixed} : Point{fixed, span.lo};
  }
  Point high_end() const {
    return orient == Orientation::Horizontal ? Point{span.hi, fixed} : Point{fixed, span.hi};
  }
  double length() const { return span.length(); }
};

struct SegmentCrossing {
  Point at;
};
struct SegmentOverlap {
  Interval along;  // shared span on the common axis
};
using SegmentIntersection =
    std::variant<std::monostate, SegmentCrossing, SegmentOverlap>;

// Perpendicular pair: a point iff each fixed coordinate lies in the other's
// span. Parallel pair: an overlap interval iff the fixed coordinates agree
// and the spans intersect. Symmetric in its arguments.
SegmentIntersection segment_intersection(const OrthoSegment& a, const OrthoSegment& b,
                                         double eps = kGeomEps);

// Axis-aligned rectangle, x0 <= x1 and y0 <= y1.
struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Interval xspan() const { return {x0, x1}; }
  Interval yspan() const { return {y0, y1}; }
  Point center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }

  bool contains(const Point& p, double eps = kGeomEps) const {
    return p.x >= x0 - eps && p.x <= x1 + eps && p.y >= y0 - eps && p.y <= y1 + eps;
  }
  bool interior_contains(const Point& p, double eps = kGeomEps) const {
    return p.x > x0 + eps && p.x < x1 - eps && p.y > y0 + eps && p.y < y1 - eps;
  }
  // Strict interior overlap of two rectangles.
  bool interior_overlaps(const Rect& o, double eps = kGeomEps) const {
    return x0 < o.x1 - eps && o.x0 < x1 - eps && y0 < o.y1 - eps && o.y0 < y1 - eps;
  }
  Rect united(const Rect& o) const {
    return {std::min(x0, o.x0), std::min(y0, o.y0), std::max(x1, o.x1), std::max(y1, o.y1)};
  }
  Rect inflated(double d) const { return {x0 - d, y0 - d, x1 + d, y1 + d}; }
};

// Euclidean gap between rectangles (0 if they touch or overlap).
double rect_distance(const Rect& a, const Rect& b);
// Euclidean distance from an axis-aligned segment to a rectangle.
double segment_rect_distance(const OrthoSegment& s, const Rect& r);
// Euclidean distance between two axis-aligned segments.
double segment_distance(const OrthoSegment& a, const OrthoSegment& b);

}  // namespace ortho
