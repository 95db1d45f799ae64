#include "ortho/instance.hpp"

#include <cmath>

#include <json.hpp>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(std::string("missing or non-numeric '") + key + "'", where);
  }
  return j[key].get<double>();
}

void validate_polyline(const std::vector<Point>& pts, const std::string& where) {
  if (pts.size() < 2) throw ParseError("path needs at least two points", where);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double dx = pts[i + 1].x - pts[i].x;
    double dy = pts[i + 1].y - pts[i].y;
    if (std::fabs(dx) > kGeomEps && std::fabs(dy) > kGeomEps) {
      throw ParseError("non-orthogonal path segment", where);
    }
  }
  // Immediate reversals would make collinear joining change the geometry.
  std::vector<Point> clean;
  for (const Point& p : pts) {
    if (clean.empty() || !(nearly_equal(clean.back().x, p.x) && nearly_equal(clean.back().y, p.y))) {
      clean.push_back(p);
    }
  }
  for (size_t i = 0; i + 2 < clean.size(); ++i) {
    Dir a = direction_between(clean[i], clean[i + 1]);
    Dir b = direction_between(clean[i + 1], clean[i + 2]);
    if (a == opposite(b)) throw ParseError("path reverses direction", where);
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("document must contain a 'vertices' array");
  }

  Instance inst;
  for (const json& jv : doc["vertices"]) {
    std::string where = "vertex " + (jv.contains("id") && jv["id"].is_string()
                                         ? jv["id"].get<std::string>()
                                         : std::string("<unnamed>"));
    if (!jv.contains("id") || !jv["id"].is_string()) {
      throw ParseError("vertex without string id", where);
    }
    Vertex v;
    v.id = jv["id"].get<std::string>();
    if (jv.contains("label")) {
      if (!jv["label"].is_string()) throw ParseError("label must be a string", where);
      v.label = jv["label"].get<std::string>();
    }
    if (jv.contains("position")) {
      const json& jp = jv["position"];
      v.position = Point{require_number(jp, "x", where), require_number(jp, "y", where)};
    }
    if (jv.contains("box")) {
      const json& jb = jv["box"];
      Box b;
      b.center = {require_number(jb, "cx", where), require_number(jb, "cy", where)};
      b.width = require_number(jb, "w", where);
      b.height = require_number(jb, "h", where);
      if (b.width <= 0 || b.height <= 0) throw ParseError("box dimensions must be positive", where);
      b.original_width = jb.contains("original_w") ? jb["original_w"].get<double>() : b.width;
      b.original_height = jb.contains("original_h") ? jb["original_h"].get<double>() : b.height;
      v.box = b;
    }
    try {
      inst.graph.add_vertex(std::move(v));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), where);
    }
  }

  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (const json& je : doc["edges"]) {
      std::string where = "edge " + (je.contains("id") && je["id"].is_string()
                                         ? je["id"].get<std::string>()
                                         : std::string("<unnamed>"));
      if (!je.contains("id") || !je["id"].is_string()) throw ParseError("edge without string id", where);
      if (!je.contains("source") || !je.contains("target") || !je["source"].is_string() ||
          !je["target"].is_string()) {
        throw ParseError("edge needs string 'source' and 'target'", where);
      }
      Edge e;
      e.id = je["id"].get<std::string>();
      std::string src = je["source"].get<std::string>();
      std::string tgt = je["target"].get<std::string>();
      e.source = inst.graph.vertex_index(src);
      e.target = inst.graph.vertex_index(tgt);
      if (e.source < 0) throw ParseError("unknown vertex id '" + src + "'", where);
      if (e.target < 0) throw ParseError("unknown vertex id '" + tgt + "'", where);
      int ei;
      try {
        ei = inst.graph.add_edge(std::move(e));
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), where);
      }
      if (je.contains("path")) {
        if (!je["path"].is_array()) throw ParseError("'path' must be an array of points", where);
        std::vector<Point> pts;
        for (const json& jp : je["path"]) {
          if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number() || !jp[1].is_number()) {
            throw ParseError("path point must be [x, y]", where);
          }
          pts.push_back({jp[0].get<double>(), jp[1].get<double>()});
        }
        validate_polyline(pts, where);
        inst.paths.emplace(ei, std::move(pts));
      }
    }
  }

  if (doc.contains("config")) {
    const json& jc = doc["config"];
    if (!jc.is_object()) throw ParseError("'config' must be an object");
    if (jc.contains("mode")) inst.config.mode = jc["mode"].get<std::string>();
    if (jc.contains("delta_min")) inst.config.delta_min = jc["delta_min"].get<double>();
    if (jc.contains("nudge")) inst.config.nudge = jc["nudge"].get<std::string>();
    if (jc.contains("passes")) inst.config.passes = jc["passes"].get<std::string>();
    if (jc.contains("seed")) inst.config.seed = jc["seed"].get<std::uint64_t>();
  }

  // Supplied boxes must not overlap (ports cannot be assigned otherwise).
  std::vector<std::pair<std::string, Rect>> placed;
  for (const Vertex& v : inst.graph.vertices()) {
    if (!v.box) continue;
    Box b = *v.box;
    if (v.position) b.center = *v.position;
    placed.push_back({v.id, b.rect()});
  }
  for (size_t i = 0; i < placed.size(); ++i) {
    for (size_t j = i + 1; j < placed.size(); ++j) {
      if (placed[i].second.interior_overlaps(placed[j].second)) {
        throw ParseError("boxes of '" + placed[i].first + "' and '" + placed[j].first +
                         "' overlap");
      }
    }
  }
  return inst;
}

std::string emit_instance(const Instance& instance) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : instance.graph.vertices()) {
    json jv;
    jv["id"] = v.id;
    if (v.label) jv["label"] = *v.label;
    if (v.position) jv["position"] = {{"x", v.position->x}, {"y", v.position->y}};
    if (v.box) {
      jv["box"] = {{"cx", v.box->center.x},
                   {"cy", v.box->center.y},
                   {"w", v.box->width},
                   {"h", v.box->height},
                   {"original_w", v.box->original_width},
                   {"original_h", v.box->original_height}};
    }
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = json::array();
  for (int ei = 0; ei < instance.graph.m(); ++ei) {
    const Edge& e = instance.graph.edge(ei);
    json je;
    je["id"] = e.id;
    je["source"] = instance.graph.vertex(e.source).id;
    je["target"] = instance.graph.vertex(e.target).id;
    auto it = instance.paths.find(ei);
    if (it != instance.paths.end()) {
      json jp = json::array();
      for (const Point& p : it->second) jp.push_back({p.x, p.y});
      je["path"] = jp;
    }
    doc["edges"].push_back(je);
  }
  json jc = json::object();
  if (instance.config.mode) jc["mode"] = *instance.config.mode;
  if (instance.config.delta_min) jc["delta_min"] = *instance.config.delta_min;
  if (instance.config.nudge) jc["nudge"] = *instance.config.nudge;
  if (instance.config.passes) jc["passes"] = *instance.config.passes;
  if (instance.config.seed) jc["seed"] = *instance.config.seed;
  if (!jc.empty()) doc["config"] = jc;
  return doc.dump(2) + "\n";
}

Instance drawing_to_instance(const Drawing& drawing) {
  Instance inst;
  for (size_t v = 0; v < drawing.boxes.size(); ++v) {
    Vertex vert;
    vert.id = drawing.vertex_ids[v];
    vert.label = drawing.labels[v];
    vert.box = drawing.boxes[v];
    vert.position = drawing.boxes[v].center;
    inst.graph.add_vertex(std::move(vert));
  }
  for (size_t e = 0; e < drawing.paths.size(); ++e) {
    Edge edge;
    edge.id = drawing.edge_ids[e];
    edge.source = drawing.edge_ends[e].first;
    edge.target = drawing.edge_ends[e].second;
    int ei = inst.graph.add_edge(std::move(edge));
    inst.paths.emplace(ei, drawing.paths[e].pts);
  }
  inst.config.mode = "given-routing";
  return inst;
}

}  // namespace ortho
