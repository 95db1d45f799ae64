#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ortho/benchmark.hpp"
#include "ortho/errors.hpp"
#include "ortho/instance.hpp"
#include "ortho/pipeline.hpp"
#include "ortho/random_graph.hpp"
#include "ortho/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ortho::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

// "5,20,100" or "5-20" size lists; "1-300" or "1,2,7" seed lists.
template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      long lo = std::stol(item.substr(0, dash));
      long hi = std::stol(item.substr(dash + 1));
      for (long v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
    } else if (!item.empty()) {
      out.push_back(static_cast<T>(std::stol(item)));
    }
  }
  return out;
}

std::string metrics_text(const ortho::DrawingMetrics& m) {
  std::ostringstream out;
  for (const auto& [k, v] : m.as_key_values()) out << k << "=" << v << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal multigraph layout: boxes for vertices, axis-aligned "
               "polylines for edges"};

  std::string input_path, svg_path, metrics_path, save_instance_path;
  std::string mode = "force", nudge = "full", passes = "H,V,H";
  std::string generate_spec, benchmark_spec, benchmark_out;
  double delta_min = 12.0;
  double avg_degree = 4.0;
  std::uint64_t seed = 1;
  bool debug_layers = false, bend_collapse = false, quiet = false;

  app.add_option("instance", input_path, "instance document (JSON)");
  app.add_option("--mode", mode, "force | given-positions | given-routing");
  app.add_option("--delta-min", delta_min, "minimum object distance (px)");
  app.add_option("--nudge", nudge, "constrained | full");
  app.add_option("--passes", passes, "nudging pass schedule, e.g. H,V,H");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--svg", svg_path, "write the drawing as SVG");
  app.add_option("--metrics", metrics_path, "write metrics as key=value lines");
  app.add_flag("--debug-layers", debug_layers, "overlay channels and representatives in the SVG");
  app.add_flag("--bend-collapse", bend_collapse, "zero separation within a path to drop bends");
  app.add_option("--generate", generate_spec, "random instance 'n,avg_degree,seed'");
  app.add_option("--save-instance", save_instance_path, "write the (generated) instance and exit");
  app.add_option("--benchmark", benchmark_spec, "batch run 'sizes x seeds', e.g. '10,50,100x1-5'");
  app.add_option("--benchmark-out", benchmark_out, "benchmark CSV output path");
  app.add_option("--avg-degree", avg_degree, "average degree for generated graphs");
  app.add_flag("--quiet", quiet, "suppress the metrics summary on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    ortho::PipelineConfig cfg;
    cfg.delta_min = delta_min;
    cfg.seed = seed;
    cfg.bend_collapse = bend_collapse;
    cfg.keep_debug = debug_layers;
    ortho::ConfigPatch flags;
    flags.mode = mode;
    flags.nudge = nudge;
    flags.passes = passes;

    if (!benchmark_spec.empty()) {
      auto x = benchmark_spec.find('x');
      if (x == std::string::npos) {
        throw ortho::ParseError("benchmark spec must look like 'sizes x seeds'");
      }
      ortho::BenchmarkSpec spec;
      spec.sizes = parse_list<int>(benchmark_spec.substr(0, x));
      spec.seeds = parse_list<std::uint64_t>(benchmark_spec.substr(x + 1));
      spec.avg_degree = avg_degree;
      ortho::apply_config_patch(&cfg, flags);
      auto rows = ortho::run_benchmark(spec, cfg);
      std::string csv = ortho::benchmark_csv(rows);
      if (!benchmark_out.empty()) {
        write_file(benchmark_out, csv);
      } else {
        std::cout << csv;
      }
      int failures = 0;
      for (const auto& r : rows) {
        if (!r.ok) ++failures;
      }
      if (failures > 0) {
        std::cerr << failures << " of " << rows.size() << " runs failed\n";
        return 2;
      }
      return 0;
    }

    ortho::Instance inst;
    if (!generate_spec.empty()) {
      auto parts = parse_list<long>(generate_spec);
      if (parts.size() != 3) {
        throw ortho::ParseError("--generate expects 'n,avg_degree,seed'");
      }
      // avg_degree may be fractional; reparse the middle field.
      std::stringstream ss(generate_spec);
      std::string a, b, c;
      std::getline(ss, a, ',');
      std::getline(ss, b, ',');
      std::getline(ss, c, ',');
      inst.graph =
          ortho::generate_random_multigraph(static_cast<int>(std::stol(a)), std::stod(b),
                                            static_cast<std::uint64_t>(std::stoull(c)));
    } else if (!input_path.empty()) {
      inst = ortho::parse_instance(read_file(input_path));
    } else {
      std::cerr << "no instance: pass a file or --generate/--benchmark\n";
      return 1;
    }

    if (!save_instance_path.empty()) {
      write_file(save_instance_path, ortho::emit_instance(inst));
      return 0;
    }

    ortho::apply_config_patch(&cfg, inst.config);  // document config first
    ortho::apply_config_patch(&cfg, flags);        // flags win

    ortho::PipelineResult res = ortho::run_pipeline(inst, cfg);
    if (!res.warning.empty()) std::cerr << "warning: " << res.warning << "\n";

    if (!svg_path.empty()) {
      ortho::SvgStyle style;
      style.debug_layers = debug_layers;
      ortho::SvgDebugData debug{res.channels, res.representatives};
      write_file(svg_path, ortho::emit_svg(res.drawing, style, debug_layers ? &debug : nullptr));
    }
    std::string mtext = metrics_text(res.metrics);
    if (!metrics_path.empty()) write_file(metrics_path, mtext);
    if (!quiet) std::cout << mtext;
    return 0;
  } catch (const ortho::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "pipeline error: " << e.what() << "\n";
    return 2;
  }
}
