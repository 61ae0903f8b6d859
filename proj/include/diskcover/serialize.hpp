#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "diskcover/reduction.hpp"
#include "diskcover/rng.hpp"
#include "diskcover/solver.hpp"

namespace diskcover {

inline const char* to_string(PointLabel l) {
  switch (l) {
    case PointLabel::Uncovered: return "uncovered";
    case PointLabel::SingleCovered: return "single_covered";
    case PointLabel::Collateral: return "collateral";
    default: return "indeterminate";
  }
}

inline const char* to_string(SetLabel l) {
  switch (l) {
    case SetLabel::NonCovering: return "non_covering";
    case SetLabel::SingleCovering: return "single_covering";
    case SetLabel::Collateral: return "collateral";
    default: return "indeterminate";
  }
}

inline const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Exact: return "exact";
    case SolveMethod::Greedy: return "greedy";
    default: return "brute_force";
  }
}

namespace detail {

inline std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Instance JSON, written by hand so coordinates carry 17 significant
/// digits and round-trip exactly.
inline void write_instance(std::ostream& os, const Instance& inst) {
  using detail::num17;
  os << "{\"params\":{\"M\":" << inst.params.num_points
     << ",\"N\":" << inst.params.num_disks
     << ",\"A\":" << num17(inst.params.region_area)
     << ",\"a\":" << num17(inst.params.disk_area)
     << ",\"seed\":" << inst.params.seed << "},\"points\":[";
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    os << (i ? "," : "") << "[" << num17(inst.points[i].x) << ","
       << num17(inst.points[i].y) << "]";
  os << "],\"centers\":[";
  for (std::size_t i = 0; i < inst.centers.size(); ++i)
    os << (i ? "," : "") << "[" << num17(inst.centers[i].x) << ","
       << num17(inst.centers[i].y) << "]";
  os << "],\"radius\":" << num17(inst.radius) << ",\"rng\":\"" << kRngName
     << "\"}\n";
}

inline Instance read_instance(std::istream& is) {
  nlohmann::json j = nlohmann::json::parse(is);
  Instance inst;
  const auto& p = j.at("params");
  inst.params.num_points = p.at("M").get<std::int64_t>();
  inst.params.num_disks = p.at("N").get<std::int64_t>();
  inst.params.region_area = p.at("A").get<double>();
  inst.params.disk_area = p.at("a").get<double>();
  inst.params.seed = p.at("seed").get<std::uint64_t>();
  inst.params.validate();
  for (const auto& pt : j.at("points"))
    inst.points.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
  for (const auto& pt : j.at("centers"))
    inst.centers.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
  inst.radius = j.at("radius").get<double>();
  if (static_cast<std::int64_t>(inst.points.size()) != inst.params.num_points ||
      static_cast<std::int64_t>(inst.centers.size()) != inst.params.num_disks)
    throw std::invalid_argument("instance: coordinate counts disagree with params");
  return inst;
}

inline void write_classification(std::ostream& os, const Classification& c) {
  nlohmann::ordered_json j;
  j["point_labels"] = nlohmann::json::array();
  for (PointLabel l : c.point_labels) j["point_labels"].push_back(to_string(l));
  j["set_labels"] = nlohmann::json::array();
  for (SetLabel l : c.set_labels) j["set_labels"].push_back(to_string(l));
  j["necessary_sets"] = c.necessary_sets;
  j["rounds"] = c.rounds;
  os << j.dump() << "\n";
}

inline void write_solution(std::ostream& os, const FullSolveResult& r) {
  nlohmann::ordered_json j;
  j["chosen_sets"] = r.cover.chosen_sets;
  j["optimal"] = r.cover.optimal;
  j["method"] = to_string(r.cover.method);
  j["covered_points"] = r.cover.covered_points;
  j["islands"] = nlohmann::json::array();
  for (std::size_t i = 0; i < r.islands.size(); ++i) {
    nlohmann::ordered_json ji;
    ji["sets"] = r.islands[i].set_indices;
    ji["points"] = r.islands[i].point_indices;
    ji["cover_size"] = r.island_solutions[i].chosen_sets.size();
    ji["optimal"] = r.island_solutions[i].optimal;
    j["islands"].push_back(ji);
  }
  j["reduction_metric"] = r.reduction_metric;
  if (!r.warning.empty()) j["warning"] = r.warning;
  os << j.dump() << "\n";
}

inline void write_islands(std::ostream& os, const std::vector<Island>& islands) {
  nlohmann::ordered_json j = nlohmann::json::array();
  for (const auto& isl : islands) {
    nlohmann::ordered_json ji;
    ji["sets"] = isl.set_indices;
    ji["points"] = isl.point_indices;
    j.push_back(ji);
  }
  os << j.dump() << "\n";
}

}  // namespace diskcover
