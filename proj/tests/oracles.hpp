// Independent reference implementations used only by tests. These must not
// share code paths with the library routines they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "diskcover/geometry.hpp"
#include "diskcover/reduction.hpp"
#include "diskcover/rng.hpp"

namespace oracles {

using diskcover::Classification;
using diskcover::IncidenceStructure;
using diskcover::Instance;
using diskcover::PointLabel;
using diskcover::SetLabel;

// O(M*N) double loop, no spatial grid.
inline IncidenceStructure naive_incidence(const Instance& inst) {
  IncidenceStructure inc;
  inc.sets_of_point.resize(inst.points.size());
  inc.points_of_set.resize(inst.centers.size());
  const double r2 = inst.radius * inst.radius;
  for (std::size_t s = 0; s < inst.centers.size(); ++s)
    for (std::size_t p = 0; p < inst.points.size(); ++p) {
      const double dx = inst.points[p].x - inst.centers[s].x;
      const double dy = inst.points[p].y - inst.centers[s].y;
      if (dx * dx + dy * dy <= r2) {
        inc.points_of_set[s].push_back(static_cast<int>(p));
        inc.sets_of_point[p].push_back(static_cast<int>(s));
      }
    }
  return inc;
}

// Reference labeler: recomputes everything from the definitions each round,
// with full scans instead of incremental degree bookkeeping.
inline Classification reference_classify(const IncidenceStructure& inc) {
  const int m = static_cast<int>(inc.num_points());
  const int n = static_cast<int>(inc.num_sets());
  Classification out;
  out.point_labels.assign(m, PointLabel::Indeterminate);
  out.set_labels.assign(n, SetLabel::Indeterminate);
  std::vector<char> pt_removed(m, 0), set_removed(n, 0);

  for (int p = 0; p < m; ++p)
    if (inc.sets_of_point[p].empty()) {
      out.point_labels[p] = PointLabel::Uncovered;
      pt_removed[p] = 1;
    }
  for (int s = 0; s < n; ++s)
    if (inc.points_of_set[s].empty()) {
      out.set_labels[s] = SetLabel::NonCovering;
      set_removed[s] = 1;
    }

  for (;;) {
    // Points whose remaining coverer count is exactly one.
    std::vector<int> singles;
    for (int p = 0; p < m; ++p) {
      if (pt_removed[p]) continue;
      int deg = 0;
      for (int s : inc.sets_of_point[p]) deg += !set_removed[s];
      if (deg == 1) singles.push_back(p);
    }
    for (int p : singles)
      for (int s : inc.sets_of_point[p])
        if (!set_removed[s]) out.set_labels[s] = SetLabel::SingleCovering;

    // Remaining points inside any single-covering set become collateral.
    std::vector<int> collaterals;
    for (int p = 0; p < m; ++p) {
      if (pt_removed[p]) continue;
      if (std::find(singles.begin(), singles.end(), p) != singles.end())
        continue;
      bool hit = false;
      for (int s : inc.sets_of_point[p])
        if (out.set_labels[s] == SetLabel::SingleCovering) hit = true;
      if (hit) collaterals.push_back(p);
    }
    if (singles.empty() && collaterals.empty()) break;
    ++out.rounds;

    for (int p : singles) {
      out.point_labels[p] = PointLabel::SingleCovered;
      pt_removed[p] = 1;
    }
    for (int p : collaterals) {
      out.point_labels[p] = PointLabel::Collateral;
      pt_removed[p] = 1;
    }
    for (int s = 0; s < n; ++s) {
      if (set_removed[s]) continue;
      if (out.set_labels[s] == SetLabel::SingleCovering) {
        set_removed[s] = 1;
        continue;
      }
      bool any_left = false;
      for (int p : inc.points_of_set[s]) any_left |= !pt_removed[p];
      if (!any_left) {
        out.set_labels[s] = SetLabel::Collateral;
        set_removed[s] = 1;
      }
    }
  }
  for (int s = 0; s < n; ++s)
    if (out.set_labels[s] == SetLabel::SingleCovering)
      out.necessary_sets.push_back(s);
  return out;
}

// Area of the intersection of a disk at (qx, qy) with the square
// [0,side]^2, by Simpson integration of the clipped chord.
inline double disk_square_area(double qx, double qy, double r, double side) {
  const double x0 = std::max(0.0, qx - r), x1 = std::min(side, qx + r);
  if (x1 <= x0) return 0.0;
  const int n = 512;  // Simpson panels (even)
  const double h = (x1 - x0) / n;
  auto chord = [&](double x) {
    const double dx = x - qx;
    const double t = r * r - dx * dx;
    if (t <= 0) return 0.0;
    const double half = std::sqrt(t);
    return std::max(0.0, std::min(side, qy + half) - std::max(0.0, qy - half));
  };
  double acc = chord(x0) + chord(x1);
  for (int i = 1; i < n; ++i) acc += chord(x0 + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Exact expected uncovered-point fraction with disk centers uniform over
// the square and disks allowed to overhang: quadrature of
// (1 - area(B(q,r) ∩ square)/A)^N over point positions q. Splits into the
// constant interior, four edge strips, and four corner patches.
inline double expected_uncovered_fraction(const diskcover::InstanceParams& p) {
  const double side = p.side();
  const double A = p.region_area;
  const double r = std::sqrt(p.disk_area / std::numbers::pi);
  const double N = static_cast<double>(p.num_disks);
  auto uncov = [&](double qx, double qy) {
    return std::pow(1.0 - disk_square_area(qx, qy, r, side) / A, N);
  };
  if (2 * r >= side) {  // no interior shortcut, plain 2D quadrature
    const int n = 256;
    double acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc += uncov((i + 0.5) * side / n, (j + 0.5) * side / n);
    return acc / (n * n);
  }
  const double interior = std::pow(1.0 - p.disk_area / A, N);
  const int n = 256;
  double edge = 0;  // 1D: distance d from one edge, far from the others
  for (int i = 0; i < n; ++i) edge += uncov((i + 0.5) * r / n, side / 2);
  edge *= r / n;
  double corner = 0;  // 2D r x r patch at a corner
  const int nc = 96;
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      corner += uncov((i + 0.5) * r / nc, (j + 0.5) * r / nc);
  corner *= r * r / (nc * nc);
  return ((side - 2 * r) * (side - 2 * r) * interior +
          4 * (side - 2 * r) * edge + 4 * corner) /
         (side * side);
}

// Two-sample Kolmogorov-Smirnov p-value (asymptotic).
inline double ks_two_sample_p(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = a.size(), nb = b.size();
  double d = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  const double lambda = (ne + 0.12 + 0.11 / ne) * d;
  double p = 0;
  for (int k = 1; k <= 100; ++k)
    p += 2.0 * (k % 2 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(p, 0.0, 1.0);
}

// Small random geometric instance for exhaustive checks (M <= 12, N <= 10).
inline Instance small_instance(std::uint64_t seed) {
  std::mt19937_64 gen(diskcover::splitmix64(seed));
  diskcover::InstanceParams p;
  p.num_points = static_cast<std::int64_t>(gen() % 13);  // 0..12
  p.num_disks = static_cast<std::int64_t>(gen() % 10) + 1;
  p.region_area = 1.0;
  p.disk_area = 0.02 + 0.28 * diskcover::uniform01(gen);
  p.seed = seed;
  return diskcover::sample_instance(p);
}

inline std::vector<int> covered_point_ids(const IncidenceStructure& inc) {
  std::vector<int> ids;
  for (std::size_t p = 0; p < inc.num_points(); ++p)
    if (!inc.sets_of_point[p].empty()) ids.push_back(static_cast<int>(p));
  return ids;
}

// Hand-built incidence from per-set point lists.
inline IncidenceStructure make_incidence(
    int num_points, std::vector<std::vector<int>> points_of_set) {
  IncidenceStructure inc;
  inc.sets_of_point.resize(num_points);
  inc.points_of_set = std::move(points_of_set);
  for (auto& pts : inc.points_of_set) std::sort(pts.begin(), pts.end());
  for (std::size_t s = 0; s < inc.points_of_set.size(); ++s)
    for (int p : inc.points_of_set[s])
      inc.sets_of_point[p].push_back(static_cast<int>(s));
  return inc;
}

inline std::vector<int> all_set_ids(const IncidenceStructure& inc) {
  std::vector<int> ids(inc.num_sets());
  for (std::size_t s = 0; s < ids.size(); ++s) ids[s] = static_cast<int>(s);
  return ids;
}

}  // namespace oracles
