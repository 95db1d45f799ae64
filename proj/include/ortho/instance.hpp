#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/multigraph.hpp"

namespace ortho {

// Config keys an instance document may carry; the CLI merges them with its
// own flags (flags win).
struct ConfigPatch {
  std::optional<std::string> mode;
  std::optional<double> delta_min;
  std::optional<std::string> nudge;
  std::optional<std::string> passes;
  std::optional<std::uint64_t> seed;
};

// A parsed instance: the multigraph, optional per-vertex geometry (kept on
// the vertices), optional supplied routings, and optional config.
struct Instance {
  Multigraph graph;
  std::map<int, std::vector<Point>> paths;  // edge index -> orthogonal polyline
  ConfigPatch config;
};

// Parses the JSON instance document. Reports malformed structure, dangling
// ids, duplicate ids, non-orthogonal supplied paths and overlapping supplied
// boxes as ParseError with a location hint.
Instance parse_instance(const std::string& text);

std::string emit_instance(const Instance& instance);

// The finished drawing as an instance document (given-routing flavor).
Instance drawing_to_instance(const Drawing& drawing);

}  // namespace ortho
