#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/metrics.hpp"
#include "ortho/pipeline.hpp"

namespace ortho {

struct BenchmarkSpec {
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  double avg_degree = 4.0;
};

struct BenchmarkRow {
  int n = 0;
  std::uint64_t seed = 0;
  int m = 0;
  bool ok = false;
  std::string error;
  DrawingMetrics metrics;
  std::vector<StageTiming> timings;
  double total_seconds = 0.0;
};

// One pipeline run per (size, seed); failures are recorded and the batch
// continues.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const PipelineConfig& cfg);

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

}  // namespace ortho
