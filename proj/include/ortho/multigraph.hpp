#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ortho/geometry.hpp"

namespace ortho {

// Vertex box: an axis-aligned rectangle given by center and dimensions.
// original_width/original_height record the size the box had when it was
// created; later stages may grow a box but never shrink it below these.
struct Box {
  Point center;
  double width = 0.0;
  double height = 0.0;
  double original_width = 0.0;
  double original_height = 0.0;

  Rect rect() const {
    return {center.x - width / 2.0, center.y - height / 2.0,
            center.x + width / 2.0, center.y + height / 2.0};
  }
  static Box from_rect(const Rect& r, double orig_w, double orig_h) {
    Box b;
    b.center = r.center();
    b.width = r.width();
    b.height = r.height();
    b.original_width = orig_w;
    b.original_height = orig_h;
    return b;
  }
};

struct Vertex {
  std::string id;
  std::optional<std::string> label;
  std::optional<Box> box;
  std::optional<Point> position;
};

struct Edge {
  std::string id;
  int source = -1;  // vertex index
  int target = -1;  // vertex index; may equal source (self-loop)
};

// A multigraph: parallel edges and self-loops are allowed. Vertex and edge
// ids must be unique; edge endpoints must reference existing vertices.
class Multigraph {
 public:
  int add_vertex(Vertex v);
  int add_edge(Edge e);

  int n() const { return static_cast<int>(vertices_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Vertex& vertex(int i) { return vertices_[static_cast<size_t>(i)]; }
  const Vertex& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
  const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

  // Index lookup by id; -1 when absent.
  int vertex_index(const std::string& id) const;

  // Number of incident edge endpoints (a self-loop counts twice).
  int degree(int vertex) const;

  bool is_self_loop(int edge) const {
    const Edge& e = edges_[static_cast<size_t>(edge)];
    return e.source == e.target;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_by_id_;
  std::unordered_map<std::string, int> edge_by_id_;
};

// Sizes a vertex box for a text label and a port budget. The height stays at
// the base height; the width grows as needed so that the label fits at
// per_char_width pixels per character and so that `degree` ports fit on the
// perimeter with gaps of at least min_port_gap under the even-spacing rule
// (a side of length L carries at most floor(L / gap - 1) ports).
// The returned original_width/original_height equal the returned dimensions.
Box box_from_label(const std::string& label, double base_width, double base_height,
                   double per_char_width, double min_port_gap, int degree);

// Largest number of evenly spaced ports a side of length `len` can carry
// while keeping consecutive gaps (including to the corners) >= min_gap.
int side_port_capacity(double len, double min_gap);

}  // namespace ortho
