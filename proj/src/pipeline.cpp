#include "ortho/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

using Clock = std::chrono::steady_clock;

struct StageTimer {
  std::vector<StageTiming>* sink;
  std::string name;
  Clock::time_point start = Clock::now();
  ~StageTimer() {
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    sink->push_back({name, s});
  }
};

// Keeps the largest connected component (self-loops do not affect
// connectivity); returns the reduced instance and whether anything was cut.
Instance largest_component(const Instance& inst, bool* reduced) {
  const Multigraph& g = inst.graph;
  int n = g.n();
  std::vector<int> uf(static_cast<size_t>(n));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : g.edges()) uf[static_cast<size_t>(find(e.source))] = find(e.target);

  std::vector<int> size(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++size[static_cast<size_t>(find(v))];
  int best_root = 0;
  for (int v = 0; v < n; ++v) {
    if (size[static_cast<size_t>(find(v))] > size[static_cast<size_t>(find(best_root))]) {
      best_root = find(v);
    }
  }
  best_root = find(best_root);
  if (size[static_cast<size_t>(best_root)] == n) {
    *reduced = false;
    return inst;
  }

  *reduced = true;
  Instance out;
  std::vector<int> remap(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (find(v) != best_root) continue;
    remap[static_cast<size_t>(v)] = out.graph.add_vertex(g.vertex(v));
  }
  for (int ei = 0; ei < g.m(); ++ei) {
    const Edge& e = g.edge(ei);
    if (remap[static_cast<size_t>(e.source)] < 0) continue;
    Edge copy = e;
    copy.source = remap[static_cast<size_t>(e.source)];
    copy.target = remap[static_cast<size_t>(e.target)];
    int ni = out.graph.add_edge(std::move(copy));
    auto it = inst.paths.find(ei);
    if (it != inst.paths.end()) out.paths.emplace(ni, it->second);
  }
  out.config = inst.config;
  return out;
}

Side side_of_boundary_point(const Box& b, const Point& p) {
  Rect r = b.rect();
  if (nearly_equal(p.x, r.x0) && p.y >= r.y0 - kGeomEps && p.y <= r.y1 + kGeomEps) return Side::West;
  if (nearly_equal(p.x, r.x1) && p.y >= r.y0 - kGeomEps && p.y <= r.y1 + kGeomEps) return Side::East;
  if (nearly_equal(p.y, r.y0) && p.x >= r.x0 - kGeomEps && p.x <= r.x1 + kGeomEps) return Side::South;
  if (nearly_equal(p.y, r.y1) && p.x >= r.x0 - kGeomEps && p.x <= r.x1 + kGeomEps) return Side::North;
  throw PipelineError("parse", "supplied path endpoint does not lie on its box boundary");
}

std::vector<Box> make_boxes(const Multigraph& g, const PipelineConfig& cfg) {
  std::vector<Box> boxes;
  boxes.reserve(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    const Vertex& vert = g.vertex(v);
    if (vert.box) {
      boxes.push_back(*vert.box);
      continue;
    }
    Box b = box_from_label(vert.label.value_or(""), cfg.box_width, cfg.box_height,
                           cfg.per_char_width, cfg.port_gap, g.degree(v));
    if (vert.position) b.center = *vert.position;
    boxes.push_back(b);
  }
  return boxes;
}

}  // namespace

void apply_config_patch(PipelineConfig* cfg, const ConfigPatch& patch) {
  if (patch.mode) {
    if (*patch.mode == "force") cfg->mode = PipelineMode::Force;
    else if (*patch.mode == "given-positions") cfg->mode = PipelineMode::GivenPositions;
    else if (*patch.mode == "given-routing") cfg->mode = PipelineMode::GivenRouting;
    else throw ParseError("unknown mode '" + *patch.mode + "'", "config");
  }
  if (patch.delta_min) {
    if (*patch.delta_min < 0) throw ParseError("delta_min must be >= 0", "config");
    cfg->delta_min = *patch.delta_min;
  }
  if (patch.nudge) {
    if (*patch.nudge == "constrained") cfg->nudge = NudgeMode::Constrained;
    else if (*patch.nudge == "full") cfg->nudge = NudgeMode::Full;
    else throw ParseError("unknown nudge mode '" + *patch.nudge + "'", "config");
  }
  if (patch.passes) cfg->passes = parse_pass_schedule(*patch.passes);
  if (patch.seed) cfg->seed = *patch.seed;
}

std::vector<PassAxis> parse_pass_schedule(const std::string& text) {
  std::vector<PassAxis> out;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c == 'H' || c == 'h') out.push_back(PassAxis::Horizontal);
    else if (c == 'V' || c == 'v') out.push_back(PassAxis::Vertical);
    else throw ParseError(std::string("bad pass schedule character '") + c + "'", "config");
  }
  if (out.empty()) throw ParseError("pass schedule must not be empty", "config");
  return out;
}

PipelineResult run_pipeline(const Instance& original, const PipelineConfig& cfg) {
  PipelineResult res;

  bool reduced = false;
  Instance inst = largest_component(original, &reduced);
  const Multigraph& g = inst.graph;
  if (g.n() < 1) throw PipelineError("parse", "instance has no vertices");
  if (reduced) {
    res.warning = "input disconnected; kept the largest connected component (" +
                  std::to_string(g.n()) + " vertices, " + std::to_string(g.m()) + " edges)";
  }

  Drawing& d = res.drawing;
  for (int v = 0; v < g.n(); ++v) {
    d.vertex_ids.push_back(g.vertex(v).id);
    d.labels.push_back(g.vertex(v).label);
  }
  for (int e = 0; e < g.m(); ++e) {
    d.edge_ids.push_back(g.edge(e).id);
    d.edge_ends.push_back({g.edge(e).source, g.edge(e).target});
  }

  std::vector<Box> boxes;
  {
    StageTimer t{&res.timings, "box-sizing"};
    boxes = make_boxes(g, cfg);
  }

  if (cfg.mode == PipelineMode::Force) {
    LayoutConfig lc;
    lc.iterations = cfg.layout_iterations;
    lc.cooling = cfg.cooling;
    lc.seed = cfg.seed;
    double diag = 0.0;
    for (const Box& b : boxes) diag = std::max(diag, std::hypot(b.width, b.height));
    lc.ideal_edge_length = cfg.ideal_edge_length > 0 ? cfg.ideal_edge_length : diag * 2.0;
    lc.margin = cfg.overlap_margin >= 0 ? cfg.overlap_margin : 2.0 * cfg.delta_min;
    {
      StageTimer t{&res.timings, "force-directed"};
      std::vector<Point> pos = force_layout(g, lc);
      for (int v = 0; v < g.n(); ++v) boxes[static_cast<size_t>(v)].center = pos[static_cast<size_t>(v)];
    }
    {
      StageTimer t{&res.timings, "overlap-removal"};
      boxes = remove_overlaps(boxes, lc.margin);
    }
  } else {
    for (int v = 0; v < g.n(); ++v) {
      if (!g.vertex(v).box && !g.vertex(v).position) {
        throw PipelineError("parse", "mode requires a position or box for vertex '" +
                                         g.vertex(v).id + "'");
      }
    }
  }
  d.boxes = boxes;

  if (cfg.mode == PipelineMode::GivenRouting) {
    // Supplied routing: adopt the polylines, derive ports, then nudge.
    d.ports.assign(static_cast<size_t>(2 * g.m()), Port{});
    for (int e = 0; e < g.m(); ++e) {
      auto it = inst.paths.find(e);
      if (it == inst.paths.end()) {
        throw PipelineError("parse", "mode given-routing requires a path for edge '" +
                                         g.edge(e).id + "'");
      }
      RoutedPath rp;
      rp.edge = e;
      rp.pts = join_collinear(it->second);
      d.paths.push_back(std::move(rp));
      auto [u, v] = d.edge_ends[static_cast<size_t>(e)];
      Port pu, pv;
      pu.edge = pv.edge = e;
      pu.endpoint = 0;
      pv.endpoint = 1;
      pu.vertex = u;
      pv.vertex = v;
      pu.position = d.paths.back().pts.front();
      pv.position = d.paths.back().pts.back();
      pu.side = side_of_boundary_point(boxes[static_cast<size_t>(u)], pu.position);
      pv.side = side_of_boundary_point(boxes[static_cast<size_t>(v)], pv.position);
      d.ports[static_cast<size_t>(2 * e)] = pu;
      d.ports[static_cast<size_t>(2 * e + 1)] = pv;
    }
  } else {
    PortAssignment ports;
    {
      StageTimer t{&res.timings, "port-assignment"};
      try {
        ports = assign_ports(g, boxes);
      } catch (const std::invalid_argument& e) {
        throw PipelineError("port-assignment", e.what());
      }
    }
    d.ports = ports.ports;

    Rect bounds;
    {
      StageTimer t{&res.timings, "routing-graph"};
      bool first = true;
      for (const Box& b : boxes) {
        bounds = first ? b.rect() : bounds.united(b.rect());
        first = false;
      }
      bounds = bounds.inflated(2.0 * std::max(cfg.delta_min, 1.0));
      res.channels = find_channels(boxes, bounds);
      res.representatives = select_representatives(res.channels, ports.ports, boxes, bounds);
      res.routing_graph = build_routing_graph(res.representatives, ports.ports);
    }

    {
      StageTimer t{&res.timings, "edge-routing"};
      for (int e = 0; e < g.m(); ++e) {
        int sv = res.routing_graph.port_vertex[static_cast<size_t>(2 * e)];
        int tv = res.routing_graph.port_vertex[static_cast<size_t>(2 * e + 1)];
        res.hpaths.push_back(route_edge(res.routing_graph, sv, tv, e, g.edge(e).id));
      }
    }
    {
      StageTimer t{&res.timings, "crossing-reduction"};
      res.hpaths = reduce_crossings(res.routing_graph, std::move(res.hpaths));
    }
    {
      StageTimer t{&res.timings, "edge-ordering"};
      res.bundle_order = order_paths(res.routing_graph, res.hpaths);
    }
    for (const EdgePath& p : res.hpaths) d.paths.push_back(realize_path(res.routing_graph, p));
    sync_ports_to_paths(&d);
  }

  {
    StageTimer t{&res.timings, "edge-nudging"};
    NudgeOptions opts;
    opts.mode = cfg.nudge;
    opts.delta_min = cfg.delta_min;
    opts.schedule = cfg.passes;
    opts.bend_collapse = cfg.bend_collapse;
    opts.collect_audit = cfg.collect_audit;
    const BundleOrder* order =
        cfg.mode == PipelineMode::GivenRouting ? nullptr : &res.bundle_order;
    res.nudge_audits = run_nudging_passes(&d, order, opts);
  }

  {
    StageTimer t{&res.timings, "metrics"};
    res.metrics = compute_metrics(d);
  }

  if (!cfg.keep_debug) {
    res.channels.clear();
    res.representatives.clear();
  }
  return res;
}

}  // namespace ortho
