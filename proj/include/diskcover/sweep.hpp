#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskcover/geometry.hpp"
#include "diskcover/islands.hpp"
#include "diskcover/parallel.hpp"
#include "diskcover/reduction.hpp"
#include "diskcover/rng.hpp"

namespace diskcover {

constexpr int kNumSweepMetrics = 14;

inline const std::array<const char*, kNumSweepMetrics>& sweep_metric_names() {
  static const std::array<const char*, kNumSweepMetrics> names = {
      "uncov_pts",  "single_pts",     "collat_pts", "indet_pts",
      "noncov_sets", "singlecov_sets", "collat_sets", "indet_sets",
      "n_islands",  "li_pts",         "li_sets",    "isl_std_pts",
      "isl_std_sets", "rounds"};
  return names;
}

struct SweepConfig {
  std::vector<double> gamma_values;
  std::vector<double> phi_values;
  int reps = 105;
  std::int64_t base_count = 1000;
  std::uint64_t master_seed = 1;

  SweepConfig() {
    for (int v = 3; v <= 12; ++v) {
      gamma_values.push_back(v);
      phi_values.push_back(v);
    }
  }

  void validate() const {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (base_count < 1)
      throw std::invalid_argument("base_count must be >= 1");
    for (double g : gamma_values)
      if (!(g > 0)) throw std::invalid_argument("gamma values must be > 0");
    for (double f : phi_values)
      if (!(f > 0)) throw std::invalid_argument("phi values must be > 0");
    if (gamma_values.empty() || phi_values.empty())
      throw std::invalid_argument("empty parameter grid");
  }
};

/// One replication. Point metrics are fractions of M, set metrics fractions
/// of N; li_* are largest-island members over all points/sets.
struct RepRecord {
  double gamma = 0, phi = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  std::int64_t num_points = 0, num_disks = 0;
  double disk_area = 0;
  std::array<double, kNumSweepMetrics> values{};
};

struct SweepCellStats {
  double gamma = 0, phi = 0;  // realized values
  int reps = 0;
  std::array<double, kNumSweepMetrics> mean{};
  std::array<double, kNumSweepMetrics> stddev{};  // population sigma
};

inline RepRecord run_replication(double gamma, double phi,
                                 const SweepConfig& config,
                                 std::uint64_t gamma_index,
                                 std::uint64_t phi_index, int rep) {
  RepRecord rec;
  rec.rep = rep;
  rec.seed = derive_seed(config.master_seed, gamma_index, phi_index,
                         static_cast<std::uint64_t>(rep));
  InstanceParams params =
      derive_params(gamma, phi, config.base_count, rec.seed);
  rec.gamma = params.gamma();
  rec.phi = params.phi();
  rec.num_points = params.num_points;
  rec.num_disks = params.num_disks;
  rec.disk_area = params.disk_area;

  Instance inst = sample_instance(params);
  IncidenceStructure inc = build_incidence(inst);
  Classification cls = classify(inc);
  ResidualProblem res = residual_problem(cls, inc);
  std::vector<Island> islands = decompose(res);
  IslandStats stats = island_stats(islands);

  const double m = static_cast<double>(params.num_points);
  const double n = static_cast<double>(params.num_disks);
  std::array<std::int64_t, 4> pt_counts{}, set_counts{};
  for (PointLabel l : cls.point_labels)
    ++pt_counts[static_cast<int>(l)];
  for (SetLabel l : cls.set_labels) ++set_counts[static_cast<int>(l)];

  auto& v = rec.values;
  v[0] = pt_counts[static_cast<int>(PointLabel::Uncovered)] / m;
  v[1] = pt_counts[static_cast<int>(PointLabel::SingleCovered)] / m;
  v[2] = pt_counts[static_cast<int>(PointLabel::Collateral)] / m;
  v[3] = pt_counts[static_cast<int>(PointLabel::Indeterminate)] / m;
  v[4] = set_counts[static_cast<int>(SetLabel::NonCovering)] / n;
  v[5] = set_counts[static_cast<int>(SetLabel::SingleCovering)] / n;
  v[6] = set_counts[static_cast<int>(SetLabel::Collateral)] / n;
  v[7] = set_counts[static_cast<int>(SetLabel::Indeterminate)] / n;
  v[8] = stats.n_islands;
  v[9] = stats.largest_points / m;
  v[10] = stats.largest_sets / n;
  v[11] = stats.std_points;
  v[12] = stats.std_sets;
  v[13] = cls.rounds;
  return rec;
}

/// All replications of one grid cell, aggregated with population standard
/// deviations over reps.
inline SweepCellStats run_cell(double gamma, double phi,
                               const SweepConfig& config,
                               std::uint64_t gamma_index,
                               std::uint64_t phi_index,
                               std::vector<RepRecord>* raw = nullptr) {
  config.validate();
  SweepCellStats cell;
  cell.reps = config.reps;
  std::array<double, kNumSweepMetrics> sum{}, sum2{};
  for (int rep = 0; rep < config.reps; ++rep) {
    RepRecord rec =
        run_replication(gamma, phi, config, gamma_index, phi_index, rep);
    cell.gamma = rec.gamma;
    cell.phi = rec.phi;
    for (int k = 0; k < kNumSweepMetrics; ++k) {
      sum[k] += rec.values[k];
      sum2[k] += rec.values[k] * rec.values[k];
    }
    if (raw) raw->push_back(rec);
  }
  const double r = config.reps;
  for (int k = 0; k < kNumSweepMetrics; ++k) {
    cell.mean[k] = sum[k] / r;
    cell.stddev[k] =
        std::sqrt(std::max(0.0, sum2[k] / r - cell.mean[k] * cell.mean[k]));
  }
  return cell;
}

/// Convenience overload; gamma/phi must be members of the config grid.
inline SweepCellStats run_cell(double gamma, double phi,
                               const SweepConfig& config,
                               std::vector<RepRecord>* raw = nullptr) {
  auto index_of = [](const std::vector<double>& vals, double v) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] == v) return i;
    throw std::invalid_argument("value not on the configured grid");
  };
  return run_cell(gamma, phi, config,
                  index_of(config.gamma_values, gamma),
                  index_of(config.phi_values, phi), raw);
}

/// Whole grid, row-major (gamma outer, phi inner). Cells are independent
/// and run on `threads` workers; output order is fixed regardless.
inline std::vector<SweepCellStats> run_grid(
    const SweepConfig& config, int threads = 1,
    std::vector<RepRecord>* raw = nullptr, bool progress = false) {
  config.validate();
  const int ng = static_cast<int>(config.gamma_values.size());
  const int np = static_cast<int>(config.phi_values.size());
  std::vector<SweepCellStats> cells(static_cast<std::size_t>(ng) * np);
  std::vector<std::vector<RepRecord>> raw_cells;
  if (raw) raw_cells.resize(cells.size());

  std::mutex io_mu;
  int done = 0;
  parallel_for(static_cast<int>(cells.size()), threads, [&](int i) {
    const int gi = i / np, pi = i % np;
    cells[i] = run_cell(config.gamma_values[gi], config.phi_values[pi],
                        config, gi, pi, raw ? &raw_cells[i] : nullptr);
    if (progress) {
      std::lock_guard lock(io_mu);
      std::cerr << "cell " << ++done << "/" << cells.size()
                << " gamma=" << config.gamma_values[gi]
                << " phi=" << config.phi_values[pi] << "\n";
    }
  });
  if (raw)
    for (auto& rc : raw_cells)
      raw->insert(raw->end(), rc.begin(), rc.end());
  return cells;
}

namespace detail {

inline std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace detail

inline void write_aggregate_csv(std::ostream& os,
                                const std::vector<SweepCellStats>& cells) {
  os << "# diskcover sweep aggregate; rng=" << kRngName
     << "; stddev=population\n";
  os << "gamma,phi,reps";
  for (const char* name : sweep_metric_names())
    os << "," << name << "_mean," << name << "_std";
  os << "\n";
  for (const auto& c : cells) {
    os << detail::fmt(c.gamma) << "," << detail::fmt(c.phi) << "," << c.reps;
    for (int k = 0; k < kNumSweepMetrics; ++k)
      os << "," << detail::fmt(c.mean[k]) << "," << detail::fmt(c.stddev[k]);
    os << "\n";
  }
}

inline void write_raw_csv(std::ostream& os,
                          const std::vector<RepRecord>& records) {
  os << "gamma,phi,rep,seed,M,N,a,uncov_pts,single_pts,collat_pts,indet_pts,"
        "noncov_sets,singlecov_sets,collat_sets,indet_sets,n_islands,li_pts,"
        "li_sets,isl_std_pts,isl_std_sets,rounds\n";
  for (const auto& r : records) {
    os << detail::fmt(r.gamma) << "," << detail::fmt(r.phi) << "," << r.rep
       << "," << r.seed << "," << r.num_points << "," << r.num_disks << ","
       << detail::fmt(r.disk_area, "%.17g");
    for (int k = 0; k < kNumSweepMetrics; ++k)
      os << "," << detail::fmt(r.values[k], "%.9g");
    os << "\n";
  }
}

}  // namespace diskcover
