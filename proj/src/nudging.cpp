#include "ortho/nudging.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

bool is_hpass(PassAxis axis) { return axis == PassAxis::Horizontal; }

// Merged interval set for the constraint-graph sweep.
class CoverSet {
 public:
  void add(Interval iv) {
    double lo = iv.lo, hi = iv.hi;
    auto it = parts_.lower_bound(lo);
    if (it != parts_.begin()) {
      auto prev = std::prev(it);
      if (prev->second >= lo - kGeomEps) it = prev;
    }
    while (it != parts_.end() && it->first <= hi + kGeomEps) {
      lo = std::min(lo, it->first);
      hi = std::max(hi, it->second);
      it = parts_.erase(it);
    }
    parts_.emplace(lo, hi);
  }
  bool intersects(Interval iv) const {
    auto it = parts_.upper_bound(iv.hi + kGeomEps);
    if (it == parts_.begin()) return false;
    --it;
    return it->second >= iv.lo - kGeomEps;
  }
  bool covers(Interval iv) const {
    auto it = parts_.upper_bound(iv.lo + kGeomEps);
    if (it == parts_.begin()) return false;
    --it;
    return it->first <= iv.lo + kGeomEps && it->second >= iv.hi - kGeomEps;
  }

 private:
  std::map<double, double> parts_;
};

}  // namespace

OrderChi build_order_chi(const Drawing& drawing, PassAxis axis, const BundleOrder* order,
                         double delta_min) {
  bool hpass = is_hpass(axis);
  Orientation object_orient = hpass ? Orientation::Vertical : Orientation::Horizontal;

  OrderChi chi;
  chi.axis = axis;
  Rect content = drawing.content_bounds();
  chi.bounds = content.inflated(2.0 * delta_min + 2.0);

  for (int v = 0; v < static_cast<int>(drawing.boxes.size()); ++v) {
    Rect r = drawing.boxes[static_cast<size_t>(v)].rect();
    NudgeObject lo, hi;
    lo.kind = NudgeObject::Kind::BoxSideLo;
    hi.kind = NudgeObject::Kind::BoxSideHi;
    lo.vertex = hi.vertex = v;
    if (hpass) {
      lo.coord = r.x0;
      hi.coord = r.x1;
      lo.extent = hi.extent = r.yspan();
    } else {
      lo.coord = r.y0;
      hi.coord = r.y1;
      lo.extent = hi.extent = r.xspan();
    }
    chi.objects.push_back(lo);
    chi.objects.push_back(hi);
  }

  for (int pi = 0; pi < static_cast<int>(drawing.paths.size()); ++pi) {
    const RoutedPath& p = drawing.paths[static_cast<size_t>(pi)];
    for (int si = 0; si < p.segments(); ++si) {
      OrthoSegment s = p.segment(si);
      if (s.orient != object_orient) continue;
      NudgeObject o;
      o.kind = NudgeObject::Kind::Segment;
      o.path = pi;
      o.seg = si;
      o.coord = s.fixed;
      o.extent = s.span;
      o.port_incident = si == 0 || si == p.segments() - 1;
      chi.objects.push_back(o);
    }
  }

  NudgeObject dlo, dhi;
  dlo.kind = NudgeObject::Kind::DummyLo;
  dhi.kind = NudgeObject::Kind::DummyHi;
  Interval full = hpass ? Interval{chi.bounds.y0 - 1.0, chi.bounds.y1 + 1.0}
                        : Interval{chi.bounds.x0 - 1.0, chi.bounds.x1 + 1.0};
  dlo.extent = dhi.extent = full;
  dlo.coord = hpass ? chi.bounds.x0 : chi.bounds.y0;
  dhi.coord = hpass ? chi.bounds.x1 : chi.bounds.y1;
  chi.objects.push_back(dlo);
  chi.objects.push_back(dhi);

  std::sort(chi.objects.begin(), chi.objects.end(),
            [](const NudgeObject& a, const NudgeObject& b) {
              if (a.coord != b.coord) return a.coord < b.coord;
              if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
              if (a.vertex != b.vertex) return a.vertex < b.vertex;
              if (a.path != b.path) return a.path < b.path;
              return a.seg < b.seg;
            });

  // Co-located overlapping segments follow the bundle order; resolve each
  // equal-coordinate segment group by the precedence graph over shared
  // routing-graph edges (topological, id-ordered fallback).
  size_t i = 0;
  while (i < chi.objects.size()) {
    size_t j = i;
    while (j + 1 < chi.objects.size() &&
           nearly_equal(chi.objects[j + 1].coord, chi.objects[i].coord) &&
           chi.objects[j + 1].kind == NudgeObject::Kind::Segment &&
           chi.objects[j].kind == NudgeObject::Kind::Segment) {
      ++j;
    }
    if (chi.objects[i].kind != NudgeObject::Kind::Segment) {
      ++i;
      continue;
    }
    size_t lo = i, hi = j + 1;
    if (hi - lo >= 2 && order != nullptr) {
      std::vector<NudgeObject> group(chi.objects.begin() + static_cast<long>(lo),
                                     chi.objects.begin() + static_cast<long>(hi));
      int k = static_cast<int>(group.size());
      // Pairwise precedence from shared bundle edges.
      auto covered_edges = [&](const NudgeObject& o) {
        std::vector<HEdgeKey> keys;
        const RoutedPath& p = drawing.paths[static_cast<size_t>(o.path)];
        if (p.hverts.empty() || p.pt_hidx.empty()) return keys;
        int a = p.pt_hidx[static_cast<size_t>(o.seg)];
        int b = p.pt_hidx[static_cast<size_t>(o.seg + 1)];
        for (int t = a; t < b; ++t) {
          keys.push_back(hedge_key(p.hverts[static_cast<size_t>(t)],
                                   p.hverts[static_cast<size_t>(t + 1)]));
        }
        return keys;
      };
      std::vector<std::vector<char>> prec(static_cast<size_t>(k),
                                          std::vector<char>(static_cast<size_t>(k), 0));
      for (int a = 0; a < k; ++a) {
        auto ea = covered_edges(group[static_cast<size_t>(a)]);
        std::set<HEdgeKey> set_a(ea.begin(), ea.end());
        for (int b = a + 1; b < k; ++b) {
          for (const HEdgeKey& key : covered_edges(group[static_cast<size_t>(b)])) {
            if (!set_a.count(key)) continue;
            auto before = order->before(group[static_cast<size_t>(a)].path,
                                        group[static_cast<size_t>(b)].path, key);
            if (before) {
              if (*before) {
                prec[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
              } else {
                prec[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
              }
            }
            break;
          }
        }
      }
      // Kahn with (path, seg) tie-break; a cycle falls back to id order.
      std::vector<int> indeg(static_cast<size_t>(k), 0);
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (prec[static_cast<size_t>(a)][static_cast<size_t>(b)]) ++indeg[static_cast<size_t>(b)];
        }
      }
      std::vector<int> result;
      std::vector<char> placed(static_cast<size_t>(k), 0);
      for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int c = 0; c < k; ++c) {
          if (placed[static_cast<size_t>(c)] || indeg[static_cast<size_t>(c)] > 0) continue;
          if (pick < 0 ||
              std::make_pair(group[static_cast<size_t>(c)].path, group[static_cast<size_t>(c)].seg) <
                  std::make_pair(group[static_cast<size_t>(pick)].path,
                                 group[static_cast<size_t>(pick)].seg)) {
            pick = c;
          }
        }
        if (pick < 0) {  // cycle: keep remaining in id order
          for (int c = 0; c < k; ++c) {
            if (!placed[static_cast<size_t>(c)]) result.push_back(c);
          }
          break;
        }
        placed[static_cast<size_t>(pick)] = 1;
        result.push_back(pick);
        for (int b = 0; b < k; ++b) {
          if (prec[static_cast<size_t>(pick)][static_cast<size_t>(b)]) --indeg[static_cast<size_t>(b)];
        }
      }
      for (int c = 0; c < k; ++c) {
        chi.objects[lo + static_cast<size_t>(c)] = group[static_cast<size_t>(result[static_cast<size_t>(c)])];
      }
    }
    i = hi;
  }
  return chi;
}

ConstraintProblem build_constraint_graph(const OrderChi& chi, double overlap_margin) {
  ConstraintProblem out;
  out.chi = chi;
  int n = static_cast<int>(chi.objects.size());
  double inflate = overlap_margin / 2.0;
  auto test_extent = [&](int i) {
    const Interval& e = chi.objects[static_cast<size_t>(i)].extent;
    return Interval{e.lo - inflate, e.hi + inflate};
  };
  for (int v = 1; v < n; ++v) {
    Interval ev = test_extent(v);
    CoverSet covered;
    for (int u = v - 1; u >= 0; --u) {
      Interval eu = test_extent(u);
      auto common = eu.intersect(ev);
      if (common) {
        if (!covered.intersects(*common)) out.arcs.push_back({u, v});
      }
      covered.add(eu);
      if (covered.covers(ev)) break;
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end(), [](const ConstraintArc& a, const ConstraintArc& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return out;
}

void simplify_constraints(ConstraintProblem* problem, NudgeMode mode, bool bend_collapse) {
  (void)mode;
  auto& arcs = problem->arcs;
  int n = static_cast<int>(problem->chi.objects.size());

  // One-step transitive reduction (computed on the original arc set).
  std::set<std::pair<int, int>> arc_set;
  std::vector<std::vector<int>> out_adj(static_cast<size_t>(n));
  for (const ConstraintArc& a : arcs) {
    arc_set.insert({a.u, a.v});
    out_adj[static_cast<size_t>(a.u)].push_back(a.v);
  }
  for (ConstraintArc& a : arcs) {
    for (int mid : out_adj[static_cast<size_t>(a.u)]) {
      if (mid == a.v) continue;
      if (arc_set.count({mid, a.v})) {
        a.removed_transitive = true;
        break;
      }
    }
  }

  auto barrier = [&](int i) {
    const NudgeObject& o = problem->chi.objects[static_cast<size_t>(i)];
    return o.immovable_class() || o.is_dummy();
  };
  auto segment_of = [&](int i) { return problem->chi.objects[static_cast<size_t>(i)]; };

  std::vector<int> uf(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) uf[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  };

  for (ConstraintArc& a : arcs) {
    const NudgeObject& ou = segment_of(a.u);
    const NudgeObject& ov = segment_of(a.v);
    a.pink = ou.immovable_class() && ov.immovable_class();
    a.same_path = ou.kind == NudgeObject::Kind::Segment &&
                  ov.kind == NudgeObject::Kind::Segment && ou.path == ov.path;
    if (a.removed_transitive || a.pink) continue;
    if (bend_collapse && a.same_path) continue;
    if (!barrier(a.u) && !barrier(a.v)) {
      uf[static_cast<size_t>(find(a.u))] = find(a.v);
    }
  }

  std::map<int, int> comp_id;
  auto comp_of_object = [&](int i) {
    int root = find(i);
    auto it = comp_id.find(root);
    if (it != comp_id.end()) return it->second;
    int id = static_cast<int>(comp_id.size());
    comp_id.emplace(root, id);
    return id;
  };

  // First pass: components rooted at movable (non-barrier) objects.
  for (ConstraintArc& a : arcs) {
    if (a.removed_transitive || a.pink) continue;
    if (bend_collapse && a.same_path) {
      a.component = -1;
      continue;
    }
    if (!barrier(a.u)) {
      a.component = comp_of_object(a.u);
    } else if (!barrier(a.v)) {
      a.component = comp_of_object(a.v);
    }
  }
  // Remaining non-pink arcs join two barriers (a dummy on one side); each
  // such arc gets its own distance variable.
  int next = static_cast<int>(comp_id.size());
  for (ConstraintArc& a : arcs) {
    if (a.removed_transitive || a.pink || a.component >= 0) continue;
    if (bend_collapse && a.same_path) continue;
    a.component = next++;
  }
  problem->num_components = next;
}

namespace {

// Objects whose coordinate becomes an LP variable in the given mode.
bool object_movable(const NudgeObject& o, NudgeMode mode) {
  if (mode == NudgeMode::Constrained) return !o.immovable_class();
  return o.kind != NudgeObject::Kind::DummyLo;  // full mode anchors the low dummy
}

struct PassRow {
  int u = -1, v = -1;       // chi objects (v - u >= ...)
  int component = -1;       // distance variable, -1 for fixed-distance rows
  double constant = 0.0;    // constant part of the required separation
};

}  // namespace

NudgeResult nudge(const ConstraintProblem& problem, NudgeMode mode, double delta_min,
                  const Drawing& drawing, bool bend_collapse) {
  const OrderChi& chi = problem.chi;
  int n = static_cast<int>(chi.objects.size());
  bool hpass = is_hpass(chi.axis);
  bool full = mode == NudgeMode::Full;

  NudgeResult res;
  res.coords.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) res.coords[static_cast<size_t>(i)] = chi.objects[static_cast<size_t>(i)].coord;

  // Rows: separation arcs plus (full mode) one size row per box.
  std::vector<PassRow> rows;
  for (const ConstraintArc& a : problem.arcs) {
    if (a.removed_transitive) continue;
    const NudgeObject& ou = chi.objects[static_cast<size_t>(a.u)];
    const NudgeObject& ov = chi.objects[static_cast<size_t>(a.v)];
    // A box's own two sides are one object; the size row below governs them.
    bool same_box = ou.is_box_side() && ov.is_box_side() && ou.vertex == ov.vertex;
    if (same_box) continue;
    PassRow row;
    row.u = a.u;
    row.v = a.v;
    if (bend_collapse && a.same_path) {
      row.component = -1;
      row.constant = 0.0;
    } else if (!full) {
      if (a.pink) continue;  // both endpoints fixed
      row.component = a.component;
      row.constant = 0.0;
    } else {
      row.component = a.pink ? -1 : a.component;
      row.constant = delta_min;
    }
    rows.push_back(row);
  }
  std::map<int, std::pair<int, int>> box_sides;  // vertex -> (lo obj, hi obj)
  for (int i = 0; i < n; ++i) {
    const NudgeObject& o = chi.objects[static_cast<size_t>(i)];
    if (o.kind == NudgeObject::Kind::BoxSideLo) box_sides[o.vertex].first = i;
    if (o.kind == NudgeObject::Kind::BoxSideHi) box_sides[o.vertex].second = i;
  }
  if (full) {
    for (const auto& [v, sides] : box_sides) {
      const Box& b = drawing.boxes[static_cast<size_t>(v)];
      PassRow row;
      row.u = sides.first;
      row.v = sides.second;
      row.component = -1;
      row.constant = hpass ? b.original_width : b.original_height;
      rows.push_back(row);
    }
  }

  // Variables.
  LinearProgram lp;
  double low_bound = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) low_bound = std::min(low_bound, chi.objects[static_cast<size_t>(i)].coord);
  low_bound -= 1.0;

  res.object_var.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (object_movable(chi.objects[static_cast<size_t>(i)], mode)) {
      res.object_var[static_cast<size_t>(i)] = lp.add_variable(0.0, low_bound, kLpInf);
    }
  }
  res.delta_var.assign(static_cast<size_t>(problem.num_components), -1);
  for (int c = 0; c < problem.num_components; ++c) {
    res.delta_var[static_cast<size_t>(c)] = lp.add_variable(0.0, 0.0, kLpInf);
  }
  res.var_component.assign(static_cast<size_t>(lp.num_vars()), -1);
  for (int c = 0; c < problem.num_components; ++c) {
    res.var_component[static_cast<size_t>(res.delta_var[static_cast<size_t>(c)])] = c;
  }
  // Positions of movable non-barrier objects belong to their component.
  {
    std::map<std::pair<int, int>, int> seg_comp;  // (path, seg) -> component
    for (const ConstraintArc& a : problem.arcs) {
      if (a.component < 0) continue;
      for (int end : {a.u, a.v}) {
        const NudgeObject& o = chi.objects[static_cast<size_t>(end)];
        if (o.kind == NudgeObject::Kind::Segment && !o.immovable_class()) {
          seg_comp[{o.path, o.seg}] = a.component;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      const NudgeObject& o = chi.objects[static_cast<size_t>(i)];
      int var = res.object_var[static_cast<size_t>(i)];
      if (var < 0 || o.kind != NudgeObject::Kind::Segment || o.immovable_class()) continue;
      auto it = seg_comp.find({o.path, o.seg});
      if (it != seg_comp.end()) res.var_component[static_cast<size_t>(var)] = it->second;
    }
  }

  // Constraints.
  for (const PassRow& row : rows) {
    std::vector<std::pair<int, double>> terms;
    double rhs = row.constant;
    int vu = res.object_var[static_cast<size_t>(row.u)];
    int vv = res.object_var[static_cast<size_t>(row.v)];
    if (vv >= 0) {
      terms.push_back({vv, 1.0});
    } else {
      rhs -= chi.objects[static_cast<size_t>(row.v)].coord;
    }
    if (vu >= 0) {
      terms.push_back({vu, -1.0});
    } else {
      rhs += chi.objects[static_cast<size_t>(row.u)].coord;
    }
    if (row.component >= 0) terms.push_back({res.delta_var[static_cast<size_t>(row.component)], -1.0});
    if (terms.empty()) continue;
    lp.add_constraint(std::move(terms), rhs);
  }

  // Objective.
  int dummy_lo = -1, dummy_hi = -1;
  for (int i = 0; i < n; ++i) {
    if (chi.objects[static_cast<size_t>(i)].kind == NudgeObject::Kind::DummyLo) dummy_lo = i;
    if (chi.objects[static_cast<size_t>(i)].kind == NudgeObject::Kind::DummyHi) dummy_hi = i;
  }
  int W = problem.num_components;
  if (!full) {
    if (dummy_hi >= 0 && res.object_var[static_cast<size_t>(dummy_hi)] >= 0) {
      lp.add_objective(res.object_var[static_cast<size_t>(dummy_hi)], static_cast<double>(W));
    }
    if (dummy_lo >= 0 && res.object_var[static_cast<size_t>(dummy_lo)] >= 0) {
      lp.add_objective(res.object_var[static_cast<size_t>(dummy_lo)], -static_cast<double>(W));
    }
    for (int c = 0; c < W; ++c) lp.add_objective(res.delta_var[static_cast<size_t>(c)], -1.0);
  } else {
    // Perpendicular segments: their lengths are coordinate differences of
    // their endpoint objects (neighbour segments or the port's box side).
    Orientation perp = hpass ? Orientation::Horizontal : Orientation::Vertical;
    std::map<std::pair<int, int>, int> seg_obj;
    for (int i = 0; i < n; ++i) {
      const NudgeObject& o = chi.objects[static_cast<size_t>(i)];
      if (o.kind == NudgeObject::Kind::Segment) seg_obj[{o.path, o.seg}] = i;
    }
    struct Term {
      int obj;
      double coeff;
    };
    std::vector<Term> length_terms;
    int num_perp = 0;
    for (int pi = 0; pi < static_cast<int>(drawing.paths.size()); ++pi) {
      const RoutedPath& p = drawing.paths[static_cast<size_t>(pi)];
      for (int si = 0; si < p.segments(); ++si) {
        if (p.segment(si).orient != perp) continue;
        ++num_perp;
        auto endpoint_obj = [&](int pt_index, int port_index) {
          int neighbour = pt_index == si ? si - 1 : si + 1;
          if (neighbour >= 0 && neighbour < p.segments()) {
            auto it = seg_obj.find({pi, neighbour});
            return it == seg_obj.end() ? -1 : it->second;
          }
          const Port& port = drawing.ports[static_cast<size_t>(port_index)];
          bool lo_side = hpass ? port.side == Side::West : port.side == Side::South;
          auto sides = box_sides.find(port.vertex);
          if (sides == box_sides.end()) return -1;
          return lo_side ? sides->second.first : sides->second.second;
        };
        int obj_a = endpoint_obj(si, 2 * pi);
        int obj_b = endpoint_obj(si + 1, 2 * pi + 1);
        if (obj_a < 0 || obj_b < 0) continue;
        double ca = hpass ? p.pts[static_cast<size_t>(si)].x : p.pts[static_cast<size_t>(si)].y;
        double cb = hpass ? p.pts[static_cast<size_t>(si + 1)].x : p.pts[static_cast<size_t>(si + 1)].y;
        int right = cb >= ca ? obj_b : obj_a;
        int left = cb >= ca ? obj_a : obj_b;
        length_terms.push_back({right, 2.0});
        length_terms.push_back({left, -2.0});
      }
    }
    double K = 2.0 * (static_cast<double>(W) + static_cast<double>(num_perp));
    if (dummy_hi >= 0 && res.object_var[static_cast<size_t>(dummy_hi)] >= 0) {
      lp.add_objective(res.object_var[static_cast<size_t>(dummy_hi)], K);
    }
    for (const auto& [v, sides] : box_sides) {
      int vlo = res.object_var[static_cast<size_t>(sides.first)];
      int vhi = res.object_var[static_cast<size_t>(sides.second)];
      if (vhi >= 0) lp.add_objective(vhi, K);
      if (vlo >= 0) lp.add_objective(vlo, -K);
    }
    for (const Term& t : length_terms) {
      int var = res.object_var[static_cast<size_t>(t.obj)];
      if (var >= 0) lp.add_objective(var, t.coeff);
    }
    for (int c = 0; c < W; ++c) lp.add_objective(res.delta_var[static_cast<size_t>(c)], -1.0);
  }

  // Crash basis: longest-path compaction (every separation at its constant,
  // distance variables at zero) is feasible and tight along a spanning tree.
  LpBasisHint hint;
  hint.row_basic_var.assign(static_cast<size_t>(lp.num_rows()), -1);
  {
    std::vector<double> value(static_cast<size_t>(n));
    std::vector<int> tree_row(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      value[static_cast<size_t>(i)] = res.object_var[static_cast<size_t>(i)] >= 0
                                          ? low_bound
                                          : chi.objects[static_cast<size_t>(i)].coord;
    }
    // Rows ordered by head object's chi position gives a topological order.
    std::vector<int> row_order(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) row_order[r] = static_cast<int>(r);
    std::sort(row_order.begin(), row_order.end(), [&](int a, int b) {
      if (rows[static_cast<size_t>(a)].v != rows[static_cast<size_t>(b)].v) {
        return rows[static_cast<size_t>(a)].v < rows[static_cast<size_t>(b)].v;
      }
      return a < b;
    });
    for (int r : row_order) {
      const PassRow& row = rows[static_cast<size_t>(r)];
      double need = value[static_cast<size_t>(row.u)] + row.constant;
      if (res.object_var[static_cast<size_t>(row.v)] < 0) continue;  // fixed head
      if (need > value[static_cast<size_t>(row.v)] + 1e-12) {
        value[static_cast<size_t>(row.v)] = need;
        tree_row[static_cast<size_t>(row.v)] = r;
      }
    }
    // Map pass rows to LP rows: they were added in the same order.
    std::vector<int> lp_row_of_pass(rows.size(), -1);
    {
      int lp_row = 0;
      for (size_t r = 0; r < rows.size(); ++r) {
        const PassRow& row = rows[r];
        bool has_terms = res.object_var[static_cast<size_t>(row.u)] >= 0 ||
                         res.object_var[static_cast<size_t>(row.v)] >= 0 || row.component >= 0;
        if (has_terms) lp_row_of_pass[r] = lp_row++;
      }
    }
    for (int i = 0; i < n; ++i) {
      int tr = tree_row[static_cast<size_t>(i)];
      if (tr < 0) continue;
      int lr = lp_row_of_pass[static_cast<size_t>(tr)];
      if (lr >= 0) hint.row_basic_var[static_cast<size_t>(lr)] = res.object_var[static_cast<size_t>(i)];
    }
  }

  LpSolution sol = solve_lp(lp, &hint);
  if (sol.status == LpStatus::Infeasible) {
    throw InternalError("nudging LP infeasible (constraint construction bug)");
  }
  if (sol.status == LpStatus::Unbounded) {
    throw InternalError("nudging LP unbounded (objective construction bug)");
  }

  for (int i = 0; i < n; ++i) {
    int var = res.object_var[static_cast<size_t>(i)];
    if (var >= 0) res.coords[static_cast<size_t>(i)] = sol.x[static_cast<size_t>(var)];
  }
  res.delta.assign(static_cast<size_t>(problem.num_components), 0.0);
  for (int c = 0; c < problem.num_components; ++c) {
    double base = full ? delta_min : 0.0;
    res.delta[static_cast<size_t>(c)] = base + sol.x[static_cast<size_t>(res.delta_var[static_cast<size_t>(c)])];
  }
  res.objective = sol.objective;
  res.lp_iterations = sol.iterations;
  res.lp = std::move(lp);
  res.solution = std::move(sol);
  return res;
}

int find_improvable_component(const NudgeResult& result, double gamma) {
  for (int c = 0; c < static_cast<int>(result.delta_var.size()); ++c) {
    LinearProgram probe = result.lp;
    for (int v = 0; v < probe.num_vars(); ++v) {
      probe.set_objective(v, 0.0);
      double xv = result.solution.x[static_cast<size_t>(v)];
      if (v == result.delta_var[static_cast<size_t>(c)]) {
        probe.set_bounds(v, xv + gamma, kLpInf);
      } else if (result.var_component[static_cast<size_t>(v)] != c) {
        probe.set_bounds(v, xv, xv);
      }
    }
    LpSolution sol = solve_lp(probe);
    if (sol.status != LpStatus::Infeasible) return c;
  }
  return -1;
}

namespace {

// Writes the solved pass coordinates back into boxes and polylines.
void apply_pass(Drawing* d, const ConstraintProblem& problem, const NudgeResult& res) {
  const OrderChi& chi = problem.chi;
  bool hpass = is_hpass(chi.axis);

  std::map<int, std::pair<double, double>> new_sides;  // vertex -> (lo, hi)
  for (int i = 0; i < static_cast<int>(chi.objects.size()); ++i) {
    const NudgeObject& o = chi.objects[static_cast<size_t>(i)];
    double c = res.coords[static_cast<size_t>(i)];
    if (o.kind == NudgeObject::Kind::BoxSideLo) new_sides[o.vertex].first = c;
    if (o.kind == NudgeObject::Kind::BoxSideHi) new_sides[o.vertex].second = c;
  }
  for (auto& [v, lohi] : new_sides) {
    Box& b = d->boxes[static_cast<size_t>(v)];
    Rect r = b.rect();
    if (hpass) {
      r.x0 = lohi.first;
      r.x1 = lohi.second;
    } else {
      r.y0 = lohi.first;
      r.y1 = lohi.second;
    }
    b = Box::from_rect(r, b.original_width, b.original_height);
  }

  for (int i = 0; i < static_cast<int>(chi.objects.size()); ++i) {
    const NudgeObject& o = chi.objects[static_cast<size_t>(i)];
    if (o.kind != NudgeObject::Kind::Segment) continue;
    RoutedPath& p = d->paths[static_cast<size_t>(o.path)];
    double c = res.coords[static_cast<size_t>(i)];
    if (hpass) {
      p.pts[static_cast<size_t>(o.seg)].x = c;
      p.pts[static_cast<size_t>(o.seg + 1)].x = c;
    } else {
      p.pts[static_cast<size_t>(o.seg)].y = c;
      p.pts[static_cast<size_t>(o.seg + 1)].y = c;
    }
  }

  // Path endpoints whose first/last segment is parallel to the pass axis sit
  // on a box side; snap them to the solved side coordinate.
  for (size_t pi = 0; pi < d->paths.size(); ++pi) {
    RoutedPath& p = d->paths[pi];
    if (p.segments() < 1) continue;
    auto snap = [&](int seg_index, size_t pt_index, const Port& port) {
      OrthoSegment s = p.segment(seg_index);
      Orientation pass_parallel = hpass ? Orientation::Horizontal : Orientation::Vertical;
      if (s.orient != pass_parallel) return;
      const Box& b = d->boxes[static_cast<size_t>(port.vertex)];
      Rect r = b.rect();
      double coord;
      if (hpass) {
        coord = port.side == Side::West ? r.x0 : r.x1;
        p.pts[pt_index].x = coord;
      } else {
        coord = port.side == Side::South ? r.y0 : r.y1;
        p.pts[pt_index].y = coord;
      }
    };
    snap(0, 0, d->ports[2 * pi]);
    snap(p.segments() - 1, p.pts.size() - 1, d->ports[2 * pi + 1]);
  }
}

void rejoin_paths(Drawing* d) {
  for (RoutedPath& p : d->paths) {
    if (p.pts.size() < 3) continue;
    std::vector<int> keep = join_collinear_keep_indices(p.pts);
    if (keep.size() == p.pts.size()) continue;
    std::vector<Point> pts;
    std::vector<int> hidx;
    for (int k : keep) {
      pts.push_back(p.pts[static_cast<size_t>(k)]);
      if (!p.pt_hidx.empty()) hidx.push_back(p.pt_hidx[static_cast<size_t>(k)]);
    }
    p.pts = std::move(pts);
    p.pt_hidx = std::move(hidx);
  }
}

}  // namespace

std::vector<NudgePassAudit> run_nudging_passes(Drawing* drawing, const BundleOrder* order,
                                               const NudgeOptions& options) {
  std::vector<NudgePassAudit> audits;
  for (PassAxis axis : options.schedule) {
    OrderChi chi = build_order_chi(*drawing, axis, order, options.delta_min);
    if (chi.objects.size() <= 2) continue;  // dummies only
    double margin = options.mode == NudgeMode::Full ? options.delta_min : 0.0;
    ConstraintProblem problem = build_constraint_graph(chi, margin);
    simplify_constraints(&problem, options.mode, options.bend_collapse);
    NudgeResult result =
        nudge(problem, options.mode, options.delta_min, *drawing, options.bend_collapse);

    NudgePassAudit audit;
    audit.axis = axis;
    audit.objects = static_cast<int>(chi.objects.size());
    audit.arcs = static_cast<int>(problem.arcs.size());
    audit.components = problem.num_components;
    audit.max_violation = lp_max_violation(result.lp, result.solution.x);

    apply_pass(drawing, problem, result);
    rejoin_paths(drawing);
    sync_ports_to_paths(drawing);

    if (options.collect_audit) {
      audit.result = std::move(result);
      audit.problem = std::move(problem);
      audits.push_back(std::move(audit));
    }
  }
  return audits;
}

}  // namespace ortho
