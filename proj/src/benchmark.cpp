#include "ortho/benchmark.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "ortho/random_graph.hpp"

namespace ortho {

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const PipelineConfig& cfg) {
  std::vector<BenchmarkRow> rows;
  for (int n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      BenchmarkRow row;
      row.n = n;
      row.seed = seed;
      auto start = std::chrono::steady_clock::now();
      try {
        Instance inst;
        inst.graph = generate_random_multigraph(n, spec.avg_degree, seed);
        row.m = inst.graph.m();
        PipelineConfig run_cfg = cfg;
        run_cfg.seed = seed;
        PipelineResult res = run_pipeline(inst, run_cfg);
        row.metrics = res.metrics;
        row.timings = res.timings;
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
      row.total_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
  // Stage columns: union of stage names in first-seen order.
  std::vector<std::string> stages;
  std::set<std::string> seen;
  for (const BenchmarkRow& r : rows) {
    for (const StageTiming& t : r.timings) {
      if (seen.insert(t.name).second) stages.push_back(t.name);
    }
  }
  std::ostringstream out;
  out << "n,seed,m,ok,crossings,bends,total_edge_length,edge_length_variance,area,"
         "aspect_ratio,delta_min,total_seconds";
  for (const std::string& s : stages) out << ",t_" << s;
  out << "\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };
  for (const BenchmarkRow& r : rows) {
    out << r.n << "," << r.seed << "," << r.m << "," << (r.ok ? 1 : 0) << ",";
    if (r.ok) {
      out << r.metrics.crossings << "," << r.metrics.bends << ","
          << num(r.metrics.total_edge_length) << "," << num(r.metrics.edge_length_variance)
          << "," << num(r.metrics.area) << "," << num(r.metrics.aspect_ratio) << ","
          << num(r.metrics.delta_min);
    } else {
      out << ",,,,,,";
    }
    out << "," << num(r.total_seconds);
    for (const std::string& s : stages) {
      double v = 0.0;
      for (const StageTiming& t : r.timings) {
        if (t.name == s) v += t.seconds;
      }
      out << "," << num(v);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ortho
