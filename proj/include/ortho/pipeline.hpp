#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/force_layout.hpp"
#include "ortho/instance.hpp"
#include "ortho/metrics.hpp"
#include "ortho/nudging.hpp"
#include "ortho/routing_graph.hpp"

namespace ortho {

enum class PipelineMode { Force, GivenPositions, GivenRouting };

struct PipelineConfig {
  PipelineMode mode = PipelineMode::Force;
  double delta_min = 12.0;
  NudgeMode nudge = NudgeMode::Full;
  std::vector<PassAxis> passes = {PassAxis::Horizontal, PassAxis::Vertical,
                                  PassAxis::Horizontal};
  bool bend_collapse = false;
  std::uint64_t seed = 1;

  // Vertex box sizing.
  double box_width = 12.0;
  double box_height = 38.0;
  double per_char_width = 8.0;
  double port_gap = 18.0;

  // Force stage; ideal_edge_length <= 0 and margin < 0 mean "derive".
  int layout_iterations = 1000;
  double ideal_edge_length = 0.0;
  double cooling = 0.99;
  double overlap_margin = -1.0;

  bool collect_audit = false;
  bool keep_debug = false;  // retain channels/representatives for SVG overlay
};

struct StageTiming {
  std::string name;
  double seconds = 0.0;
};

struct PipelineResult {
  Drawing drawing;
  DrawingMetrics metrics;
  std::vector<StageTiming> timings;
  std::string warning;  // e.g. reduced to the largest connected component

  BundleOrder bundle_order;
  std::vector<NudgePassAudit> nudge_audits;

  // Populated when cfg.keep_debug is set (or for tests).
  RoutingGraph routing_graph;
  std::vector<Channel> channels;
  std::vector<Representative> representatives;
  std::vector<EdgePath> hpaths;
};

PipelineResult run_pipeline(const Instance& instance, const PipelineConfig& cfg);

// Applies config keys carried by an instance document (CLI flags override).
void apply_config_patch(PipelineConfig* cfg, const ConfigPatch& patch);

std::vector<PassAxis> parse_pass_schedule(const std::string& text);

}  // namespace ortho
