#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "diskcover/reduction.hpp"

namespace diskcover {

/// One connected component of the residual bipartite structure; indices are
/// global (into the original instance).
struct Island {
  std::vector<int> set_indices;
  std::vector<int> point_indices;
};

struct IslandStats {
  int n_islands = 0;
  int largest_points = 0;
  int largest_sets = 0;
  double std_points = 0.0;  // population sigma over islands
  double std_sets = 0.0;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace detail

/// Split the residual into islands: union-find over sets, uniting the sets
/// that share each point. Islands come out sorted by their smallest set
/// index, with sorted member lists.
inline std::vector<Island> decompose(const ResidualProblem& res) {
  const int ns = static_cast<int>(res.set_ids.size());
  detail::UnionFind uf(ns);
  for (const auto& coverers : res.incidence.sets_of_point)
    for (std::size_t i = 1; i < coverers.size(); ++i)
      uf.unite(coverers[0], coverers[i]);

  std::vector<int> island_of_root(ns, -1);
  std::vector<Island> islands;
  for (int s = 0; s < ns; ++s) {
    int root = uf.find(s);
    if (island_of_root[root] < 0) {
      island_of_root[root] = static_cast<int>(islands.size());
      islands.emplace_back();
    }
    islands[island_of_root[root]].set_indices.push_back(res.set_ids[s]);
  }
  for (std::size_t p = 0; p < res.point_ids.size(); ++p)
    if (!res.incidence.sets_of_point[p].empty()) {
      int root = uf.find(res.incidence.sets_of_point[p][0]);
      islands[island_of_root[root]].point_indices.push_back(res.point_ids[p]);
    }

  for (auto& isl : islands) {
    std::sort(isl.set_indices.begin(), isl.set_indices.end());
    std::sort(isl.point_indices.begin(), isl.point_indices.end());
  }
  std::sort(islands.begin(), islands.end(), [](const Island& a, const Island& b) {
    return a.set_indices.front() < b.set_indices.front();
  });
  return islands;
}

/// Largest island is selected by point count, ties broken by set count,
/// then by smallest set index.
inline IslandStats island_stats(const std::vector<Island>& islands) {
  IslandStats st;
  st.n_islands = static_cast<int>(islands.size());
  if (islands.empty()) return st;

  const Island* largest = &islands.front();
  double sum_p = 0, sum_s = 0, sum_p2 = 0, sum_s2 = 0;
  for (const auto& isl : islands) {
    const double np = static_cast<double>(isl.point_indices.size());
    const double ns = static_cast<double>(isl.set_indices.size());
    sum_p += np;
    sum_s += ns;
    sum_p2 += np * np;
    sum_s2 += ns * ns;
    if (isl.point_indices.size() > largest->point_indices.size() ||
        (isl.point_indices.size() == largest->point_indices.size() &&
         (isl.set_indices.size() > largest->set_indices.size() ||
          (isl.set_indices.size() == largest->set_indices.size() &&
           isl.set_indices.front() < largest->set_indices.front()))))
      largest = &isl;
  }
  st.largest_points = static_cast<int>(largest->point_indices.size());
  st.largest_sets = static_cast<int>(largest->set_indices.size());
  const double n = static_cast<double>(st.n_islands);
  st.std_points = std::sqrt(std::max(0.0, sum_p2 / n - (sum_p / n) * (sum_p / n)));
  st.std_sets = std::sqrt(std::max(0.0, sum_s2 / n - (sum_s / n) * (sum_s / n)));
  return st;
}

}  // namespace diskcover
