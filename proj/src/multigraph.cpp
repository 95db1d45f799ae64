#include "ortho/multigraph.hpp"

#include <cmath>
#include <stdexcept>

namespace ortho {

int Multigraph::add_vertex(Vertex v) {
  if (v.id.empty()) throw std::invalid_argument("vertex id must not be empty");
  if (vertex_by_id_.count(v.id)) {
    throw std::invalid_argument("duplicate vertex id '" + v.id + "'");
  }
  int idx = n();
  vertex_by_id_.emplace(v.id, idx);
  vertices_.push_back(std::move(v));
  return idx;
}

int Multigraph::add_edge(Edge e) {
  if (e.id.empty()) throw std::invalid_argument("edge id must not be empty");
  if (edge_by_id_.count(e.id)) {
    throw std::invalid_argument("duplicate edge id '" + e.id + "'");
  }
  if (e.source < 0 || e.source >= n() || e.target < 0 || e.target >= n()) {
    throw std::invalid_argument("edge '" + e.id + "' references a missing vertex");
  }
  int idx = m();
  edge_by_id_.emplace(e.id, idx);
  edges_.push_back(std::move(e));
  return idx;
}

int Multigraph::vertex_index(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  return it == vertex_by_id_.end() ? -1 : it->second;
}

int Multigraph::degree(int vertex) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.source == vertex) ++d;
    if (e.target == vertex) ++d;
  }
  return d;
}

int side_port_capacity(double len, double min_gap) {
  if (min_gap <= 0.0) return 1 << 20;
  // p ports need p+1 gaps of len/(p+1) each, so p <= len/gap - 1.
  double cap = len / min_gap - 1.0;
  if (cap < 0.0) return 0;
  return static_cast<int>(std::floor(cap + 1e-9));
}

Box box_from_label(const std::string& label, double base_width, double base_height,
                   double per_char_width, double min_port_gap, int degree) {
  if (base_width <= 0.0 || base_height <= 0.0) {
    throw std::invalid_argument("box base dimensions must be positive");
  }
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");

  double w = std::max(base_width, per_char_width * static_cast<double>(label.size()));

  // Widen until the perimeter can host all incident ports. Only the two
  // horizontal sides grow; the vertical sides keep the base height.
  int vertical_cap = 2 * side_port_capacity(base_height, min_port_gap);
  int needed_on_horizontal = degree - vertical_cap;
  if (needed_on_horizontal > 0) {
    int per_side = (needed_on_horizontal + 1) / 2;
    double min_w = min_port_gap * static_cast<double>(per_side + 1);
    w = std::max(w, min_w);
  }

  Box b;
  b.center = {0.0, 0.0};
  b.width = w;
  b.height = base_height;
  b.original_width = w;
  b.original_height = base_height;
  return b;
}

}  // namespace ortho
