#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskcover/rng.hpp"

namespace diskcover {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Raw instance parameters: M points and N disks of area a in a square
/// region of area A. The dimensionless densities are gamma = M*a/A
/// (points per disk-sized area) and phi = N*a/A (disks covering a point).
struct InstanceParams {
  std::int64_t num_points = 0;  // M
  std::int64_t num_disks = 0;   // N
  double region_area = 1.0;     // A
  double disk_area = 0.0;       // a
  std::uint64_t seed = 0;

  double gamma() const {
    return static_cast<double>(num_points) * disk_area / region_area;
  }
  double phi() const {
    return static_cast<double>(num_disks) * disk_area / region_area;
  }
  double side() const { return std::sqrt(region_area); }

  void validate() const {
    if (num_points < 0 || num_disks < 0)
      throw std::invalid_argument("counts must be non-negative");
    if (!(region_area > 0.0) || !std::isfinite(region_area))
      throw std::invalid_argument("region area must be positive and finite");
    if (!(disk_area > 0.0) || !std::isfinite(disk_area))
      throw std::invalid_argument("disk area must be positive and finite");
    if (disk_area > region_area)
      throw std::invalid_argument("disk area exceeds region area");
  }
};

/// A sampled configuration. Coordinates live in [0, sqrt(A)]^2; disks may
/// overhang the region boundary.
struct Instance {
  InstanceParams params;
  std::vector<Point> points;
  std::vector<Point> centers;
  double radius = 0.0;  // sqrt(a / pi)

  double side() const { return params.side(); }
};

/// Bipartite point/disk adjacency. A disk contains a point when the
/// Euclidean distance from its center is <= radius (closed disk).
struct IncidenceStructure {
  std::vector<std::vector<int>> sets_of_point;  // per point, sorted disk ids
  std::vector<std::vector<int>> points_of_set;  // per disk, sorted point ids

  std::size_t num_points() const { return sets_of_point.size(); }
  std::size_t num_sets() const { return points_of_set.size(); }
};

/// Rescale (gamma, phi) into concrete counts with min(M, N) = base_count
/// and A = 1. The realized gamma is exact (a = gamma/M); the realized phi
/// deviates from the request only by integer rounding of the larger count.
inline InstanceParams derive_params(double gamma, double phi,
                                    std::int64_t base_count,
                                    std::uint64_t seed) {
  if (!(gamma > 0.0) || !(phi > 0.0) || !std::isfinite(gamma) ||
      !std::isfinite(phi))
    throw std::invalid_argument("gamma and phi must be positive and finite");
  if (base_count < 1) throw std::invalid_argument("base_count must be >= 1");

  InstanceParams p;
  p.region_area = 1.0;
  p.seed = seed;
  if (gamma <= phi) {
    p.num_points = base_count;
    p.num_disks = std::llround(static_cast<double>(base_count) * phi / gamma);
  } else {
    p.num_disks = base_count;
    p.num_points = std::llround(static_cast<double>(base_count) * gamma / phi);
  }
  p.disk_area = gamma * p.region_area / static_cast<double>(p.num_points);
  p.validate();
  return p;
}

/// Draw M points then N centers i.i.d. uniform over the square.
/// Bit-identical output for a given seed.
inline Instance sample_instance(const InstanceParams& params) {
  params.validate();
  Instance inst;
  inst.params = params;
  inst.radius = std::sqrt(params.disk_area / std::numbers::pi);

  std::mt19937_64 gen(params.seed);
  const double side = params.side();
  inst.points.reserve(params.num_points);
  for (std::int64_t i = 0; i < params.num_points; ++i) {
    double x = uniform01(gen) * side;
    double y = uniform01(gen) * side;
    inst.points.push_back({x, y});
  }
  inst.centers.reserve(params.num_disks);
  for (std::int64_t i = 0; i < params.num_disks; ++i) {
    double x = uniform01(gen) * side;
    double y = uniform01(gen) * side;
    inst.centers.push_back({x, y});
  }
  return inst;
}

/// Build the incidence structure with a uniform grid of cell side >= r, so
/// each disk only probes the 3x3 cell block around its center. Output is
/// identical to the naive all-pairs scan.
inline IncidenceStructure build_incidence(const Instance& inst) {
  const double side = inst.side();
  const double r = inst.radius;
  const double r2 = r * r;
  const int m = static_cast<int>(inst.points.size());
  const int n = static_cast<int>(inst.centers.size());

  int ncells = 1;
  if (r > 0.0 && side / r > 1.0)
    ncells = std::min(static_cast<int>(std::floor(side / r)), 4096);
  const double inv_cell = static_cast<double>(ncells) / side;

  auto cell_of = [&](double v) {
    int c = static_cast<int>(v * inv_cell);
    return std::clamp(c, 0, ncells - 1);
  };

  // Bucket points by cell.
  std::vector<std::vector<int>> buckets(
      static_cast<std::size_t>(ncells) * ncells);
  for (int p = 0; p < m; ++p)
    buckets[static_cast<std::size_t>(cell_of(inst.points[p].y)) * ncells +
            cell_of(inst.points[p].x)]
        .push_back(p);

  IncidenceStructure inc;
  inc.sets_of_point.resize(m);
  inc.points_of_set.resize(n);
  for (int s = 0; s < n; ++s) {
    const Point c = inst.centers[s];
    const int ci = cell_of(c.x);
    const int cj = cell_of(c.y);
    auto& pts = inc.points_of_set[s];
    for (int j = std::max(0, cj - 1); j <= std::min(ncells - 1, cj + 1); ++j)
      for (int i = std::max(0, ci - 1); i <= std::min(ncells - 1, ci + 1);
           ++i)
        for (int p : buckets[static_cast<std::size_t>(j) * ncells + i]) {
          const double dx = inst.points[p].x - c.x;
          const double dy = inst.points[p].y - c.y;
          if (dx * dx + dy * dy <= r2) pts.push_back(p);
        }
    std::sort(pts.begin(), pts.end());
    for (int p : pts) inc.sets_of_point[p].push_back(s);
  }
  // sets_of_point is sorted already because disks were visited in order.
  return inc;
}

}  // namespace diskcover
