#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskcover/islands.hpp"
#include "diskcover/parallel.hpp"
#include "diskcover/reduction.hpp"

namespace diskcover {

enum class SolveMethod { Exact, Greedy, BruteForce };

struct CoverSolution {
  std::vector<int> chosen_sets;  // sorted global indices
  bool optimal = false;
  int covered_points = 0;
  SolveMethod method = SolveMethod::Exact;
};

namespace detail {

// Cover problem in local indices: sets[s] lists the points of set s.
struct SubProblem {
  int n_points = 0;
  std::vector<std::vector<int>> sets;
};

struct LocalCover {
  std::vector<int> sets;
  bool optimal = false;
};

inline std::vector<std::vector<int>> coverers_of(const SubProblem& sp) {
  std::vector<std::vector<int>> cov(sp.n_points);
  for (std::size_t s = 0; s < sp.sets.size(); ++s)
    for (int p : sp.sets[s]) cov[p].push_back(static_cast<int>(s));
  return cov;
}

inline int size_lower_bound(int uncovered, int max_set_size) {
  return (uncovered + max_set_size - 1) / max_set_size;
}

inline LocalCover greedy_core(const SubProblem& sp) {
  LocalCover out;
  std::vector<char> covered(sp.n_points, 0), chosen(sp.sets.size(), 0);
  int uncovered = sp.n_points;
  int max_size = 0;
  for (const auto& s : sp.sets)
    max_size = std::max(max_size, static_cast<int>(s.size()));

  while (uncovered > 0) {
    int best = -1, best_gain = 0;
    for (std::size_t s = 0; s < sp.sets.size(); ++s) {
      if (chosen[s]) continue;
      int gain = 0;
      for (int p : sp.sets[s]) gain += !covered[p];
      if (gain > best_gain) {  // ties keep the lowest index
        best_gain = gain;
        best = static_cast<int>(s);
      }
    }
    if (best < 0) throw std::runtime_error("greedy: uncoverable point");
    chosen[best] = 1;
    out.sets.push_back(best);
    for (int p : sp.sets[best])
      if (!covered[p]) {
        covered[p] = 1;
        --uncovered;
      }
  }
  out.optimal = sp.n_points == 0 ||
                static_cast<int>(out.sets.size()) ==
                    size_lower_bound(sp.n_points, max_size);
  return out;
}

inline LocalCover brute_core(const SubProblem& sp) {
  const int n = static_cast<int>(sp.sets.size());
  if (n > 25) throw std::invalid_argument("brute force limited to 25 sets");
  const int blocks = (sp.n_points + 63) / 64;
  std::vector<std::uint64_t> full(blocks, 0);
  for (int p = 0; p < sp.n_points; ++p)
    full[p >> 6] |= std::uint64_t{1} << (p & 63);
  std::vector<std::vector<std::uint64_t>> mask(
      n, std::vector<std::uint64_t>(blocks, 0));
  for (int s = 0; s < n; ++s)
    for (int p : sp.sets[s]) mask[s][p >> 6] |= std::uint64_t{1} << (p & 63);

  LocalCover best;
  int best_size = std::numeric_limits<int>::max();
  bool found = false;
  std::vector<std::uint64_t> acc(blocks);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const int size = std::popcount(bits);
    if (size > best_size) continue;
    std::fill(acc.begin(), acc.end(), 0);
    for (int s = 0; s < n; ++s)
      if (bits >> s & 1)
        for (int b = 0; b < blocks; ++b) acc[b] |= mask[s][b];
    if (acc != full) continue;
    std::vector<int> sets;
    for (int s = 0; s < n; ++s)
      if (bits >> s & 1) sets.push_back(s);
    if (!found || size < best_size ||
        (size == best_size && sets < best.sets)) {
      best.sets = std::move(sets);
      best_size = size;
      found = true;
    }
  }
  if (!found) throw std::runtime_error("brute force: instance infeasible");
  best.optimal = true;
  return best;
}

// Depth-first branch and bound on the lowest-degree uncovered point.
// Sets already tried at a node are banned in the later branches of that
// node, so each cover is enumerated once.
struct BranchAndBound {
  const SubProblem& sp;
  std::vector<std::vector<int>> coverers;
  std::vector<char> covered, chosen, banned;
  std::vector<int> current;
  int uncovered;
  std::uint64_t nodes = 0, budget;
  bool exceeded = false;
  std::vector<int> best;
  int best_size;

  BranchAndBound(const SubProblem& s, std::uint64_t node_budget)
      : sp(s),
        coverers(coverers_of(s)),
        covered(s.n_points, 0),
        chosen(s.sets.size(), 0),
        banned(s.sets.size(), 0),
        uncovered(s.n_points),
        budget(node_budget) {}

  void run() {
    LocalCover greedy = greedy_core(sp);
    best = greedy.sets;
    std::sort(best.begin(), best.end());
    best_size = static_cast<int>(best.size());
    if (!greedy.optimal && sp.n_points > 0) dfs();
  }

  int remaining_max_size() const {
    int m = 0;
    for (std::size_t s = 0; s < sp.sets.size(); ++s)
      if (!chosen[s] && !banned[s])
        m = std::max(m, static_cast<int>(sp.sets[s].size()));
    return m;
  }

  void dfs() {
    if (exceeded) return;
    const int depth = static_cast<int>(current.size());
    if (uncovered == 0) {
      if (depth < best_size) {
        best = current;
        std::sort(best.begin(), best.end());
        best_size = depth;
      }
      return;
    }
    if (depth + 1 >= best_size) return;
    const int max_size = remaining_max_size();
    if (max_size == 0 ||
        depth + size_lower_bound(uncovered, max_size) >= best_size)
      return;
    if (++nodes > budget) {
      exceeded = true;
      return;
    }

    // Branch point: fewest available coverers, lowest index on ties.
    int pivot = -1, pivot_deg = std::numeric_limits<int>::max();
    for (int p = 0; p < sp.n_points; ++p) {
      if (covered[p]) continue;
      int deg = 0;
      for (int s : coverers[p]) deg += !chosen[s] && !banned[s];
      if (deg < pivot_deg) {
        pivot_deg = deg;
        pivot = p;
      }
    }
    if (pivot_deg == 0) return;  // dead branch, pivot lost all coverers

    std::vector<int> branch_banned;
    for (int s : coverers[pivot]) {
      if (chosen[s] || banned[s]) continue;
      chosen[s] = 1;
      current.push_back(s);
      std::vector<int> newly;
      for (int p : sp.sets[s])
        if (!covered[p]) {
          covered[p] = 1;
          newly.push_back(p);
        }
      uncovered -= static_cast<int>(newly.size());
      dfs();
      uncovered += static_cast<int>(newly.size());
      for (int p : newly) covered[p] = 0;
      current.pop_back();
      chosen[s] = 0;
      if (exceeded) break;
      banned[s] = 1;
      branch_banned.push_back(s);
    }
    for (int s : branch_banned) banned[s] = 0;
  }
};

inline LocalCover exact_core(const SubProblem& sp, std::uint64_t budget) {
  BranchAndBound bb(sp, budget);
  bb.run();
  return {bb.best, !bb.exceeded};
}

// Restrict a global incidence to the given point/set id lists.
inline SubProblem make_subproblem(const std::vector<int>& point_ids,
                                  const std::vector<int>& set_ids,
                                  const IncidenceStructure& inc) {
  SubProblem sp;
  sp.n_points = static_cast<int>(point_ids.size());
  std::vector<int> local_of(inc.num_points(), -1);
  for (std::size_t i = 0; i < point_ids.size(); ++i)
    local_of[point_ids[i]] = static_cast<int>(i);
  sp.sets.resize(set_ids.size());
  for (std::size_t s = 0; s < set_ids.size(); ++s)
    for (int p : inc.points_of_set[set_ids[s]])
      if (local_of[p] >= 0) sp.sets[s].push_back(local_of[p]);
  return sp;
}

inline CoverSolution to_global(const LocalCover& local,
                               const std::vector<int>& set_ids, int n_points,
                               SolveMethod method) {
  CoverSolution sol;
  for (int s : local.sets) sol.chosen_sets.push_back(set_ids[s]);
  std::sort(sol.chosen_sets.begin(), sol.chosen_sets.end());
  sol.optimal = local.optimal;
  sol.covered_points = n_points;
  sol.method = method;
  return sol;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Minimum-cardinality cover of one island by branch and bound. If the node
/// budget runs out the greedy-initialized incumbent is returned with
/// optimal=false.
inline CoverSolution solve_exact(const Island& island,
                                 const IncidenceStructure& inc,
                                 std::uint64_t budget = kDefaultNodeBudget) {
  if (island.set_indices.empty())
    throw std::invalid_argument("solve_exact: empty island");
  auto sp = detail::make_subproblem(island.point_indices, island.set_indices,
                                    inc);
  auto local = detail::exact_core(sp, budget);
  return detail::to_global(local, island.set_indices, sp.n_points,
                           SolveMethod::Exact);
}

/// Standard greedy: repeatedly take the set covering the most uncovered
/// points, lowest index on ties.
inline CoverSolution solve_greedy(const std::vector<int>& point_ids,
                                  const std::vector<int>& set_ids,
                                  const IncidenceStructure& inc) {
  auto sp = detail::make_subproblem(point_ids, set_ids, inc);
  auto local = detail::greedy_core(sp);
  return detail::to_global(local, set_ids, sp.n_points, SolveMethod::Greedy);
}

/// Test oracle: enumerate all 2^|sets| subsets (|sets| <= 25) and return the
/// lexicographically smallest minimum cover.
inline CoverSolution brute_force_cover(const std::vector<int>& point_ids,
                                       const std::vector<int>& set_ids,
                                       const IncidenceStructure& inc) {
  auto sp = detail::make_subproblem(point_ids, set_ids, inc);
  auto local = detail::brute_core(sp);
  return detail::to_global(local, set_ids, sp.n_points,
                           SolveMethod::BruteForce);
}

struct FullSolveResult {
  CoverSolution cover;
  Classification classification;
  ResidualProblem residual;
  std::vector<Island> islands;
  std::vector<CoverSolution> island_solutions;
  IslandStats stats;
  double reduction_metric = 0.0;  // (largest island points+sets) / (M+N)
  std::string warning;
};

/// End-to-end pipeline: classify, decompose, solve each island exactly, and
/// assemble necessary sets plus the island covers.
inline FullSolveResult solve_full(const Instance& inst,
                                  std::uint64_t budget = kDefaultNodeBudget,
                                  int threads = 1) {
  FullSolveResult out;
  IncidenceStructure inc = build_incidence(inst);
  out.classification = classify(inc);
  out.residual = residual_problem(out.classification, inc);
  out.islands = decompose(out.residual);
  out.stats = island_stats(out.islands);

  out.island_solutions.resize(out.islands.size());
  parallel_for(static_cast<int>(out.islands.size()), threads, [&](int i) {
    out.island_solutions[i] = solve_exact(out.islands[i], inc, budget);
  });

  out.cover.chosen_sets = out.classification.necessary_sets;
  out.cover.optimal = true;
  for (const auto& sol : out.island_solutions) {
    out.cover.chosen_sets.insert(out.cover.chosen_sets.end(),
                                 sol.chosen_sets.begin(),
                                 sol.chosen_sets.end());
    if (!sol.optimal) out.cover.optimal = false;
  }
  std::sort(out.cover.chosen_sets.begin(), out.cover.chosen_sets.end());
  for (PointLabel l : out.classification.point_labels)
    out.cover.covered_points += l != PointLabel::Uncovered;
  out.cover.method =
      out.cover.optimal ? SolveMethod::Exact : SolveMethod::Greedy;
  if (!out.cover.optimal)
    out.warning = "node budget exceeded on at least one island";

  const double total = static_cast<double>(inst.points.size()) +
                       static_cast<double>(inst.centers.size());
  if (total > 0)
    out.reduction_metric =
        (out.stats.largest_points + out.stats.largest_sets) / total;
  return out;
}

}  // namespace diskcover
