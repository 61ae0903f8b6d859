// Command-line front end: instance generation, classification, exact
// solving, the (gamma, phi) Monte Carlo sweep, and heatmap rendering.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskcover/geometry.hpp"
#include "diskcover/heatmap.hpp"
#include "diskcover/serialize.hpp"
#include "diskcover/solver.hpp"
#include "diskcover/sweep.hpp"

namespace {

std::vector<double> parse_range(const std::string& s) {
  double lo, hi, step;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0 || hi < lo)
    throw CLI::ValidationError("range", "expected lo:hi:step with step > 0");
  std::vector<double> vals;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < n; ++i) vals.push_back(lo + i * step);
  return vals;
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

diskcover::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return diskcover::read_instance(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disk/point set-cover reduction and Monte Carlo sweeps"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "sample a random instance");
  double g_gamma = 0, g_phi = 0;
  std::int64_t g_base = 1000, g_points = -1, g_disks = -1;
  double g_area = 1.0, g_disk_area = 0;
  std::uint64_t g_seed = 1;
  std::string g_out;
  gen->add_option("--gamma", g_gamma, "point density M*a/A");
  gen->add_option("--phi", g_phi, "set density N*a/A");
  gen->add_option("--base-count", g_base, "min(M,N) when using gamma/phi");
  gen->add_option("-M,--points", g_points, "raw point count");
  gen->add_option("-N,--disks", g_disks, "raw disk count");
  gen->add_option("--area", g_area, "region area A");
  gen->add_option("--disk-area", g_disk_area, "per-disk area a");
  gen->add_option("--seed", g_seed, "RNG seed");
  gen->add_option("--out", g_out, "output path (default stdout)");

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "label points and sets");
  std::string c_in, c_out;
  cls_cmd->add_option("--in", c_in, "instance JSON")->required();
  cls_cmd->add_option("--out", c_out, "output path (default stdout)");

  // solve
  auto* solve_cmd =
      app.add_subcommand("solve", "exact cover via reduction + islands");
  std::string s_in, s_out;
  std::uint64_t s_budget = diskcover::kDefaultNodeBudget;
  int s_threads = 1;
  solve_cmd->add_option("--in", s_in, "instance JSON")->required();
  solve_cmd->add_option("--out", s_out, "output path (default stdout)");
  solve_cmd->add_option("--budget", s_budget, "node budget per island");
  solve_cmd->add_option("--threads", s_threads, "island solver threads");

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Monte Carlo sweep over the (gamma, phi) grid");
  std::string w_gamma_range = "3:12:1", w_phi_range = "3:12:1", w_out;
  int w_reps = 105, w_threads = 1;
  std::int64_t w_base = 1000;
  std::uint64_t w_seed = 1;
  bool w_raw = false;
  sweep_cmd->add_option("--gamma-range", w_gamma_range, "lo:hi:step");
  sweep_cmd->add_option("--phi-range", w_phi_range, "lo:hi:step");
  sweep_cmd->add_option("--reps", w_reps, "replications per cell");
  sweep_cmd->add_option("--base-count", w_base, "min(M,N) per instance");
  sweep_cmd->add_option("--seed", w_seed, "master seed");
  sweep_cmd->add_option("--threads", w_threads, "worker threads");
  sweep_cmd->add_flag("--emit-raw", w_raw,
                      "also write per-replication CSV (<out stem>.raw.csv)");
  sweep_cmd->add_option("--out", w_out, "aggregated CSV path")->required();

  // render
  auto* render_cmd =
      app.add_subcommand("render", "render a metric column as a PGM heatmap");
  std::string r_in, r_metric, r_out = "heatmap.pgm", r_scale = "data";
  int r_cell = 24;
  render_cmd->add_option("--in", r_in, "aggregated CSV")->required();
  render_cmd->add_option("--metric", r_metric, "metric column name")
      ->required();
  render_cmd->add_option("--out", r_out, "output PGM path");
  render_cmd->add_option("--scale", r_scale, "'data' (min/max) or 'unit' [0,1]");
  render_cmd->add_option("--cell-px", r_cell, "pixels per grid cell");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      diskcover::InstanceParams params;
      if (gen->count("--gamma") || gen->count("--phi")) {
        params = diskcover::derive_params(g_gamma, g_phi, g_base, g_seed);
      } else {
        if (g_points < 0 || g_disks < 0 || !(g_disk_area > 0))
          throw std::invalid_argument(
              "generate needs either --gamma/--phi or -M/-N/--disk-area");
        params.num_points = g_points;
        params.num_disks = g_disks;
        params.region_area = g_area;
        params.disk_area = g_disk_area;
        params.seed = g_seed;
        params.validate();
      }
      diskcover::Instance inst = diskcover::sample_instance(params);
      auto out = g_out.empty() ? nullptr : open_out(g_out);
      diskcover::write_instance(out ? *out : std::cout, inst);
    } else if (*cls_cmd) {
      diskcover::Instance inst = load_instance(c_in);
      auto cls = diskcover::classify(diskcover::build_incidence(inst));
      auto out = c_out.empty() ? nullptr : open_out(c_out);
      diskcover::write_classification(out ? *out : std::cout, cls);
    } else if (*solve_cmd) {
      diskcover::Instance inst = load_instance(s_in);
      auto result = diskcover::solve_full(inst, s_budget, s_threads);
      auto out = s_out.empty() ? nullptr : open_out(s_out);
      diskcover::write_solution(out ? *out : std::cout, result);
    } else if (*sweep_cmd) {
      diskcover::SweepConfig config;
      config.gamma_values = parse_range(w_gamma_range);
      config.phi_values = parse_range(w_phi_range);
      config.reps = w_reps;
      config.base_count = w_base;
      config.master_seed = w_seed;
      config.validate();

      std::vector<diskcover::RepRecord> raw;
      auto cells = diskcover::run_grid(config, w_threads,
                                       w_raw ? &raw : nullptr, true);
      auto out = open_out(w_out);
      diskcover::write_aggregate_csv(*out, cells);
      if (w_raw) {
        auto raw_out =
            open_out(diskcover::strip_extension(w_out) + ".raw.csv");
        diskcover::write_raw_csv(*raw_out, raw);
      }
    } else if (*render_cmd) {
      std::ifstream in(r_in);
      if (!in) throw std::runtime_error("cannot open input file: " + r_in);
      auto table = diskcover::read_aggregate_csv(in);
      diskcover::HeatmapSpec spec;
      spec.metric = r_metric;
      spec.out_path = r_out;
      spec.cell_px = r_cell;
      if (r_scale == "unit")
        spec.unit_scale = true;
      else if (r_scale != "data")
        throw std::invalid_argument("--scale must be 'data' or 'unit'");
      diskcover::render_heatmap(table, spec);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
