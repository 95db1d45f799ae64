#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>

#include "ortho/errors.hpp"
#include "ortho/routing_graph.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("routing_graph");

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

Box box_rect(double x0, double y0, double x1, double y1) {
  return box_at((x0 + x1) / 2, (y0 + y1) / 2, x1 - x0, y1 - y0);
}

// Literal per-pair oracle for the narrowest-right-channel rule: try every
// partner in ascending near-side order, collect blockers naively, and take
// the longest free gap meeting both extents.
std::vector<Channel> oracle_channels(const std::vector<Box>& boxes, const Rect& bounds,
                                     Orientation orient) {
  bool vertical = orient == Orientation::Vertical;
  struct Obj {
    int id;
    double low, high;
    Interval across;
  };
  std::vector<Obj> objs;
  Interval full = vertical ? bounds.yspan() : bounds.xspan();
  objs.push_back({kBorder, vertical ? bounds.x0 : bounds.y0, vertical ? bounds.x0 : bounds.y0, full});
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    Rect r = boxes[static_cast<size_t>(i)].rect();
    if (vertical) {
      objs.push_back({i, r.x0, r.x1, r.yspan()});
    } else {
      objs.push_back({i, r.y0, r.y1, r.xspan()});
    }
  }
  Obj hi{kBorder, vertical ? bounds.x1 : bounds.y1, vertical ? bounds.x1 : bounds.y1, full};

  std::vector<Channel> out;
  for (const Obj& u : objs) {
    std::optional<Channel> best;
    auto consider = [&](const Obj& v) {
      if (best) return;  // partners tried in ascending order: first hit wins
      if (v.low <= u.high + kGeomEps) return;
      // Free gaps: subtract every blocking box from the full range.
      std::vector<Interval> gaps = {full};
      for (int w = 0; w < static_cast<int>(boxes.size()); ++w) {
        if (w == u.id || w == v.id) continue;
        Rect r = boxes[static_cast<size_t>(w)].rect();
        double wlo = vertical ? r.x0 : r.y0;
        double whi = vertical ? r.x1 : r.y1;
        if (!(whi > u.high + kGeomEps && wlo < v.low - kGeomEps)) continue;
        Interval blocked = vertical ? r.yspan() : r.xspan();
        std::vector<Interval> next;
        for (const Interval& gap : gaps) {
          if (blocked.hi <= gap.lo + kGeomEps || blocked.lo >= gap.hi - kGeomEps) {
            next.push_back(gap);
            continue;
          }
          if (blocked.lo > gap.lo + kGeomEps) next.push_back({gap.lo, blocked.lo});
          if (blocked.hi < gap.hi - kGeomEps) next.push_back({blocked.hi, gap.hi});
        }
        gaps = next;
      }
      std::optional<Interval> pick;
      for (const Interval& gap : gaps) {
        if (gap.length() <= kGeomEps) continue;
        if (!gap.overlaps(u.across) || !gap.overlaps(v.across)) continue;
        if (!pick || gap.length() > pick->length() + kGeomEps) pick = gap;
      }
      if (!pick) return;
      Channel c;
      c.orient = orient;
      c.lo = u.id;
      c.hi = v.id;
      c.rect = vertical ? Rect{u.high, pick->lo, v.low, pick->hi}
                        : Rect{pick->lo, u.high, pick->hi, v.low};
      best = c;
    };
    std::vector<const Obj*> partners;
    for (const Obj& v : objs) {
      if (&v != &u) partners.push_back(&v);
    }
    std::sort(partners.begin(), partners.end(), [](const Obj* a, const Obj* b) {
      if (a->low != b->low) return a->low < b->low;
      return a->id < b->id;
    });
    for (const Obj* v : partners) consider(*v);
    consider(hi);
    if (best) out.push_back(*best);
  }
  return out;
}

bool same_channel(const Channel& a, const Channel& b) {
  return a.orient == b.orient && a.lo == b.lo && a.hi == b.hi &&
         nearly_equal(a.rect.x0, b.rect.x0) && nearly_equal(a.rect.y0, b.rect.y0) &&
         nearly_equal(a.rect.x1, b.rect.x1) && nearly_equal(a.rect.y1, b.rect.y1);
}

}  // namespace

TEST_CASE("the gap between two boxes hosts a vertical channel") {
  std::vector<Box> boxes = {box_rect(0, 0, 2, 2), box_rect(6, 0, 8, 2)};
  Rect bounds{-20, -20, 30, 30};
  auto channels = find_channels(boxes, bounds);
  bool found = false;
  for (const Channel& c : channels) {
    if (c.orient == Orientation::Vertical && c.lo == 0 && c.hi == 1) {
      found = true;
      CHECK(c.rect.x0 == doctest::Approx(2.0));
      CHECK(c.rect.x1 == doctest::Approx(6.0));
      CHECK(c.rect.y0 <= 0.0 + kGeomEps);
      CHECK(c.rect.y1 >= 2.0 - kGeomEps);
    }
  }
  CHECK(found);
}

TEST_CASE("a single box gets a channel to the right border") {
  std::vector<Box> boxes = {box_rect(0, 0, 2, 2)};
  Rect bounds{-10, -10, 12, 12};
  auto channels = find_channels(boxes, bounds);
  bool found = false;
  for (const Channel& c : channels) {
    if (c.orient == Orientation::Vertical && c.lo == 0) {
      found = true;
      CHECK(c.hi == kBorder);
      CHECK(c.rect.x1 == doctest::Approx(12.0));
    }
  }
  CHECK(found);
}

TEST_CASE("box outside bounds is rejected") {
  std::vector<Box> boxes = {box_rect(0, 0, 2, 2)};
  CHECK_THROWS_AS(find_channels(boxes, Rect{1, 1, 5, 5}), std::invalid_argument);
}

TEST_CASE("sweep equals the brute-force channel oracle on random instances") {
  std::mt19937_64 rng(31);
  auto u = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 19);
    std::vector<Box> boxes;
    int guard = 0;
    while (static_cast<int>(boxes.size()) < n && guard < 4000) {
      ++guard;
      Box b = box_at(u(0, 280), u(0, 280), u(6, 40), u(6, 40));
      bool ok = true;
      for (const Box& other : boxes) {
        Rect ra = b.rect().inflated(1.0);
        if (ra.interior_overlaps(other.rect())) ok = false;
      }
      if (ok) boxes.push_back(b);
    }
    Rect bounds{-40, -40, 340, 340};
    auto got = find_channels(boxes, bounds);
    auto want = oracle_channels(boxes, bounds, Orientation::Vertical);
    auto want_h = oracle_channels(boxes, bounds, Orientation::Horizontal);
    want.insert(want.end(), want_h.begin(), want_h.end());
    REQUIRE(got.size() == want.size());
    for (const Channel& w : want) {
      bool matched = false;
      for (const Channel& g : got) matched = matched || same_channel(g, w);
      CHECK(matched);
    }
  }
}

TEST_CASE("dominated channels are dropped") {
  std::vector<Channel> channels;
  Channel a, b;
  a.orient = b.orient = Orientation::Vertical;
  a.rect = {0, 1, 2, 3};   // y-projection [1,3]
  b.rect = {1, 0, 3, 5};   // y-projection [0,5], rects intersect
  a.lo = 0;
  b.lo = 1;
  channels = {a, b};
  auto reps = select_representatives(channels, {}, {}, Rect{-5, -5, 10, 10});
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].channel == 1);
}

TEST_CASE("a channel without ports is represented by its center line") {
  Channel c;
  c.orient = Orientation::Vertical;
  c.rect = {2, 0, 6, 2};
  auto reps = select_representatives({c}, {}, {}, Rect{-5, -5, 10, 10});
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].seg.orient == Orientation::Vertical);
  CHECK(reps[0].seg.fixed == doctest::Approx(4.0));
  CHECK(reps[0].seg.span.lo == doctest::Approx(0.0));
  CHECK(reps[0].seg.span.hi == doctest::Approx(2.0));
}

TEST_CASE("a port on the channel edge hosts the representative") {
  // North port at (3, 2) on the bottom edge of the channel above it.
  Channel c;
  c.orient = Orientation::Vertical;
  c.rect = {1, 2, 5, 8};
  Port p;
  p.edge = 0;
  p.endpoint = 0;
  p.vertex = 0;
  p.side = Side::North;
  p.position = {3.0, 2.0};
  auto reps = select_representatives({c}, {p}, {}, Rect{-5, -5, 10, 10});
  REQUIRE(reps.size() == 1);  // no stub needed: the representative starts in the port
  CHECK(reps[0].port == 0);
  CHECK(reps[0].seg.fixed == doctest::Approx(3.0));
}

TEST_CASE("an east port inside a channel connects through a stub") {
  std::vector<Box> boxes = {box_rect(0, 0, 2, 2), box_rect(6, 0, 8, 2)};
  Rect bounds{-20, -20, 30, 30};
  auto channels = find_channels(boxes, bounds);
  Port p;
  p.edge = 0;
  p.endpoint = 0;
  p.vertex = 0;
  p.side = Side::East;
  p.position = {2.0, 1.0};
  auto reps = select_representatives(channels, {p}, boxes, bounds);
  RoutingGraph g = build_routing_graph(reps, {p});
  int pv = g.port_vertex[0];
  REQUIRE(pv >= 0);
  CHECK(g.incident[static_cast<size_t>(pv)].size() >= 1);
}

TEST_CASE("grid counting: 2x2 and 3x3 representative grids") {
  auto vrep = [](double x, double lo, double hi) {
    Representative r;
    r.orient = Orientation::Vertical;
    r.seg = {Orientation::Vertical, x, {lo, hi}};
    return r;
  };
  auto hrep = [](double y, double lo, double hi) {
    Representative r;
    r.orient = Orientation::Horizontal;
    r.seg = {Orientation::Horizontal, y, {lo, hi}};
    return r;
  };
  {
    std::vector<Representative> reps = {vrep(0, 0, 1), vrep(1, 0, 1), hrep(0, 0, 1), hrep(1, 0, 1)};
    RoutingGraph g = build_routing_graph(reps, {});
    CHECK(g.verts.size() == 4);
    CHECK(g.M() == 4);
  }
  {
    std::vector<Representative> reps;
    for (int i = 0; i < 3; ++i) {
      reps.push_back(vrep(i, 0, 2));
      reps.push_back(hrep(i, 0, 2));
    }
    RoutingGraph g = build_routing_graph(reps, {});
    CHECK(g.verts.size() == 9);
    CHECK(g.M() == 12);
    for (const auto& inc : g.incident) CHECK(inc.size() <= 4);
  }
}

TEST_CASE("edges join consecutive vertices only") {
  auto vrep = [](double x, double lo, double hi) {
    Representative r;
    r.orient = Orientation::Vertical;
    r.seg = {Orientation::Vertical, x, {lo, hi}};
    return r;
  };
  std::vector<Representative> reps = {
      {Orientation::Horizontal, {Orientation::Horizontal, 0.0, {0.0, 10.0}}, -1, -1},
      vrep(1, -1, 1), vrep(4, -1, 1), vrep(9, -1, 1)};
  RoutingGraph g = build_routing_graph(reps, {});
  std::set<std::pair<double, double>> edge_spans;
  for (const auto& e : g.edges) {
    if (e.orient != Orientation::Horizontal) continue;
    double xa = g.verts[static_cast<size_t>(e.a)].p.x;
    double xb = g.verts[static_cast<size_t>(e.b)].p.x;
    edge_spans.insert({std::min(xa, xb), std::max(xa, xb)});
  }
  CHECK(edge_spans.count({1.0, 4.0}) == 1);
  CHECK(edge_spans.count({4.0, 9.0}) == 1);
  CHECK(edge_spans.count({1.0, 9.0}) == 0);
}

TEST_CASE("unroutable port raises construction failure") {
  // A lone stub-less port with no representative anywhere near it.
  Port p;
  p.edge = 0;
  p.endpoint = 0;
  p.vertex = 0;
  p.side = Side::East;
  p.position = {0.0, 0.0};
  std::vector<Representative> reps;  // nothing to connect to
  CHECK_THROWS_AS(build_routing_graph(reps, {p}), ConstructionError);
}

TEST_SUITE_END();
