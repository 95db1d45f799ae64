#include "ortho/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ortho {

namespace {

struct SegRef {
  int edge;
  OrthoSegment seg;
  bool first_or_last;  // port incident
  Point end_a, end_b;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> DrawingMetrics::as_key_values() const {
  return {
      {"crossings", std::to_string(crossings)},
      {"bends", std::to_string(bends)},
      {"total_edge_length", fmt(total_edge_length)},
      {"edge_length_variance", fmt(edge_length_variance)},
      {"area", fmt(area)},
      {"aspect_ratio", fmt(aspect_ratio)},
      {"delta_min", fmt(delta_min)},
      {"crossing_policy", "parallel-overlap-counts-once"},
  };
}

DrawingMetrics compute_metrics(const Drawing& drawing) {
  if (drawing.boxes.empty() && drawing.paths.empty()) {
    throw std::invalid_argument("compute_metrics: empty drawing");
  }

  DrawingMetrics m;

  // Collect joined segments per edge.
  std::vector<SegRef> segs;
  std::vector<double> lengths;
  for (size_t pi = 0; pi < drawing.paths.size(); ++pi) {
    const RoutedPath& p = drawing.paths[pi];
    std::vector<Point> pts = join_collinear(p.pts);
    if (pts.size() >= 2) m.bends += static_cast<long>(pts.size()) - 2;
    double len = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const Point& a = pts[i];
      const Point& b = pts[i + 1];
      OrthoSegment s;
      if (nearly_equal(a.y, b.y)) {
        s = {Orientation::Horizontal, a.y, {std::min(a.x, b.x), std::max(a.x, b.x)}};
      } else {
        s = {Orientation::Vertical, a.x, {std::min(a.y, b.y), std::max(a.y, b.y)}};
      }
      len += s.length();
      segs.push_back({static_cast<int>(pi), s, i == 0 || i + 2 == pts.size(), a, b});
    }
    lengths.push_back(len);
    m.total_edge_length += len;
  }

  if (!lengths.empty()) {
    double mean = m.total_edge_length / static_cast<double>(lengths.size());
    double ss = 0.0;
    for (double l : lengths) ss += (l - mean) * (l - mean);
    m.edge_length_variance = ss / static_cast<double>(lengths.size());
  }

  // Crossings: pairwise segment intersections between distinct edges.
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].edge == segs[j].edge) continue;
      auto res = segment_intersection(segs[i].seg, segs[j].seg);
      if (std::holds_alternative<SegmentCrossing>(res)) {
        ++m.crossings;
      } else if (std::holds_alternative<SegmentOverlap>(res)) {
        if (std::get<SegmentOverlap>(res).along.length() > kGeomEps) ++m.crossings;
      }
    }
  }

  // Area and aspect ratio of the overall bounding box.
  Rect b = drawing.content_bounds();
  m.area = b.width() * b.height();
  double lo = std::min(b.width(), b.height());
  double hi = std::max(b.width(), b.height());
  m.aspect_ratio = lo > kGeomEps ? hi / lo : std::numeric_limits<double>::infinity();

  // Minimum object distance over non-incident, non-intersecting pairs.
  double dmin = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].edge == segs[j].edge) continue;
      auto res = segment_intersection(segs[i].seg, segs[j].seg);
      if (!std::holds_alternative<std::monostate>(res)) continue;
      dmin = std::min(dmin, segment_distance(segs[i].seg, segs[j].seg));
    }
  }
  for (const SegRef& s : segs) {
    auto [u, v] = drawing.edge_ends[static_cast<size_t>(s.edge)];
    for (int b2 = 0; b2 < static_cast<int>(drawing.boxes.size()); ++b2) {
      if (b2 == u || b2 == v) continue;
      Rect r = drawing.boxes[static_cast<size_t>(b2)].rect();
      dmin = std::min(dmin, segment_rect_distance(s.seg, r));
    }
  }
  for (size_t i = 0; i < drawing.boxes.size(); ++i) {
    for (size_t j = i + 1; j < drawing.boxes.size(); ++j) {
      dmin = std::min(dmin, rect_distance(drawing.boxes[i].rect(), drawing.boxes[j].rect()));
    }
  }
  m.delta_min = dmin;
  return m;
}

}  // namespace ortho
