#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "diskcover/geometry.hpp"

namespace diskcover {

enum class PointLabel { Uncovered, SingleCovered, Collateral, Indeterminate };
enum class SetLabel { NonCovering, SingleCovering, Collateral, Indeterminate };

struct Classification {
  std::vector<PointLabel> point_labels;
  std::vector<SetLabel> set_labels;
  std::vector<int> necessary_sets;  // sorted, label == SingleCovering
  int rounds = 0;                   // fixpoint rounds that changed a label
};

/// Residual subproblem: the indeterminate points and sets, with the
/// incidence restricted to them (local indices into point_ids/set_ids).
struct ResidualProblem {
  std::vector<int> point_ids;
  std::vector<int> set_ids;
  IncidenceStructure incidence;

  bool empty() const { return set_ids.empty(); }
};

inline void check_consistent(const IncidenceStructure& inc) {
  const int n = static_cast<int>(inc.num_sets());
  for (std::size_t p = 0; p < inc.num_points(); ++p)
    for (int s : inc.sets_of_point[p]) {
      if (s < 0 || s >= n)
        throw std::invalid_argument("incidence: set index out of range");
      const auto& pts = inc.points_of_set[s];
      if (!std::binary_search(pts.begin(), pts.end(), static_cast<int>(p)))
        throw std::invalid_argument("incidence: bipartite mismatch");
    }
  std::size_t edges_p = 0, edges_s = 0;
  for (const auto& v : inc.sets_of_point) edges_p += v.size();
  for (const auto& v : inc.points_of_set) edges_s += v.size();
  if (edges_p != edges_s)
    throw std::invalid_argument("incidence: edge count mismatch");
}

/// Iterative classification fixpoint. Each round fires simultaneously:
/// active points with exactly one active coverer mark that coverer
/// necessary, then every other active point touching a newly necessary set
/// becomes collateral, then active sets left without active points become
/// collateral. Repeats until nothing changes. The per-round snapshot makes
/// the result independent of iteration order; reverse_order exists so tests
/// can assert that.
inline Classification classify(const IncidenceStructure& inc,
                               bool reverse_order = false) {
  check_consistent(inc);
  const int m = static_cast<int>(inc.num_points());
  const int n = static_cast<int>(inc.num_sets());

  Classification out;
  out.point_labels.assign(m, PointLabel::Indeterminate);
  out.set_labels.assign(n, SetLabel::Indeterminate);

  std::vector<char> pt_active(m, 1), set_active(n, 1);
  std::vector<int> active_deg(m), set_active_pts(n);

  for (int p = 0; p < m; ++p) {
    active_deg[p] = static_cast<int>(inc.sets_of_point[p].size());
    if (active_deg[p] == 0) {
      out.point_labels[p] = PointLabel::Uncovered;
      pt_active[p] = 0;
    }
  }
  for (int s = 0; s < n; ++s) {
    set_active_pts[s] = static_cast<int>(inc.points_of_set[s].size());
    if (set_active_pts[s] == 0) {
      out.set_labels[s] = SetLabel::NonCovering;
      set_active[s] = 0;
    }
  }

  auto deactivate_point = [&](int p) {
    pt_active[p] = 0;
    for (int s : inc.sets_of_point[p])
      if (set_active[s] && --set_active_pts[s] == 0) {
        out.set_labels[s] = SetLabel::Collateral;
        set_active[s] = 0;
      }
  };

  std::vector<int> point_order(m);
  for (int p = 0; p < m; ++p) point_order[p] = reverse_order ? m - 1 - p : p;

  std::vector<int> singles, necessary_new, collateral_pts;
  std::vector<char> is_single(m, 0);
  for (;;) {
    singles.clear();
    necessary_new.clear();
    collateral_pts.clear();

    // Snapshot: degree-1 points and the sets they force, all at once.
    for (int p : point_order)
      if (pt_active[p] && active_deg[p] == 1) {
        singles.push_back(p);
        is_single[p] = 1;
      }
    for (int p : singles)
      for (int s : inc.sets_of_point[p])
        if (set_active[s]) {
          if (out.set_labels[s] != SetLabel::SingleCovering) {
            out.set_labels[s] = SetLabel::SingleCovering;
            necessary_new.push_back(s);
          }
          break;  // exactly one active coverer
        }
    for (int s : necessary_new)
      for (int p : inc.points_of_set[s])
        if (pt_active[p] && !is_single[p] &&
            out.point_labels[p] != PointLabel::Collateral)
          out.point_labels[p] = PointLabel::Collateral;
    for (int s : necessary_new)
      for (int p : inc.points_of_set[s])
        if (pt_active[p] && out.point_labels[p] == PointLabel::Collateral)
          collateral_pts.push_back(p);

    if (singles.empty() && collateral_pts.empty()) break;
    ++out.rounds;

    for (int s : necessary_new) {
      set_active[s] = 0;
      for (int p : inc.points_of_set[s])
        if (pt_active[p]) --active_deg[p];
    }
    for (int p : singles) {
      out.point_labels[p] = PointLabel::SingleCovered;
      is_single[p] = 0;
      deactivate_point(p);
    }
    for (int p : collateral_pts)
      if (pt_active[p]) deactivate_point(p);
  }

  for (int s = 0; s < n; ++s)
    if (out.set_labels[s] == SetLabel::SingleCovering)
      out.necessary_sets.push_back(s);
  return out;
}

/// Restrict the incidence to indeterminate points and sets. Every residual
/// point keeps degree >= 2 by construction.
inline ResidualProblem residual_problem(const Classification& cls,
                                        const IncidenceStructure& inc) {
  if (cls.point_labels.size() != inc.num_points() ||
      cls.set_labels.size() != inc.num_sets())
    throw std::invalid_argument("classification does not match incidence");

  ResidualProblem res;
  std::vector<int> pt_local(inc.num_points(), -1), set_local(inc.num_sets(), -1);
  for (std::size_t p = 0; p < inc.num_points(); ++p)
    if (cls.point_labels[p] == PointLabel::Indeterminate) {
      pt_local[p] = static_cast<int>(res.point_ids.size());
      res.point_ids.push_back(static_cast<int>(p));
    }
  for (std::size_t s = 0; s < inc.num_sets(); ++s)
    if (cls.set_labels[s] == SetLabel::Indeterminate) {
      set_local[s] = static_cast<int>(res.set_ids.size());
      res.set_ids.push_back(static_cast<int>(s));
    }

  res.incidence.sets_of_point.resize(res.point_ids.size());
  res.incidence.points_of_set.resize(res.set_ids.size());
  for (std::size_t i = 0; i < res.set_ids.size(); ++i)
    for (int p : inc.points_of_set[res.set_ids[i]])
      if (pt_local[p] >= 0) {
        res.incidence.points_of_set[i].push_back(pt_local[p]);
        res.incidence.sets_of_point[pt_local[p]].push_back(
            static_cast<int>(i));
      }
  return res;
}

}  // namespace diskcover
