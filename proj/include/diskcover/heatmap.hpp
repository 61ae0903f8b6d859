#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskcover {

struct AggregateTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    return -1;
  }
};

/// Parse an aggregated sweep CSV; '#' lines are comments.
inline AggregateTable read_aggregate_csv(std::istream& is) {
  AggregateTable t;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (t.columns.empty()) {
      t.columns = fields;
      continue;
    }
    if (fields.size() != t.columns.size())
      throw std::invalid_argument("csv: ragged row");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& s : fields) row.push_back(std::stod(s));
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw std::invalid_argument("csv: empty input");
  return t;
}

struct HeatmapSpec {
  std::string metric;
  bool unit_scale = false;  // fixed [0,1] instead of data min/max
  std::string out_path;     // .pgm; sidecars share the stem
  int cell_px = 24;
};

struct HeatmapGrid {
  std::vector<double> gammas, phis;  // ascending
  std::vector<std::vector<double>> values;  // [phi index][gamma index]
  double lo = 0, hi = 1;
};

inline HeatmapGrid make_grid(const AggregateTable& t,
                             const HeatmapSpec& spec) {
  const int gc = t.column("gamma");
  const int pc = t.column("phi");
  const int mc = t.column(spec.metric);
  if (gc < 0 || pc < 0) throw std::invalid_argument("csv: missing gamma/phi");
  if (mc < 0)
    throw std::invalid_argument("csv: no such metric column: " + spec.metric);

  HeatmapGrid g;
  for (const auto& r : t.rows) {
    g.gammas.push_back(r[gc]);
    g.phis.push_back(r[pc]);
  }
  auto dedup = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(g.gammas);
  dedup(g.phis);
  if (g.gammas.size() * g.phis.size() != t.rows.size())
    throw std::invalid_argument("csv: rows do not form a complete grid");

  auto index_of = [](const std::vector<double>& v, double x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) -
                            v.begin());
  };
  g.values.assign(g.phis.size(), std::vector<double>(g.gammas.size(), 0));
  double lo = t.rows.front()[mc], hi = lo;
  for (const auto& r : t.rows) {
    g.values[index_of(g.phis, r[pc])][index_of(g.gammas, r[gc])] = r[mc];
    lo = std::min(lo, r[mc]);
    hi = std::max(hi, r[mc]);
  }
  if (spec.unit_scale) {
    g.lo = 0;
    g.hi = 1;
  } else {
    g.lo = lo;
    g.hi = hi;
  }
  return g;
}

inline std::string strip_extension(const std::string& path) {
  auto dot = path.find_last_of('.');
  auto slash = path.find_last_of('/');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash))
    return path;
  return path.substr(0, dot);
}

/// Render one gray block per (gamma, phi) cell: gamma increases rightward,
/// phi increases upward, larger values brighter. Also writes a sidecar with
/// the value-to-gray mapping and a gnuplot nonuniform-matrix export.
inline void render_heatmap(const AggregateTable& table,
                           const HeatmapSpec& spec) {
  HeatmapGrid g = make_grid(table, spec);
  const int ncols = static_cast<int>(g.gammas.size());
  const int nrows = static_cast<int>(g.phis.size());
  const int bs = std::max(1, spec.cell_px);

  auto gray = [&](double v) -> std::uint8_t {
    if (g.hi <= g.lo) return 0;
    double t = (v - g.lo) / (g.hi - g.lo);
    return static_cast<std::uint8_t>(
        std::lround(255.0 * std::clamp(t, 0.0, 1.0)));
  };

  std::ofstream pgm(spec.out_path, std::ios::binary);
  if (!pgm) throw std::runtime_error("cannot open " + spec.out_path);
  pgm << "P5\n" << ncols * bs << " " << nrows * bs << "\n255\n";
  for (int row = 0; row < nrows; ++row) {
    const int pi = nrows - 1 - row;  // top row = largest phi
    std::string scanline;
    for (int col = 0; col < ncols; ++col)
      scanline.append(bs, static_cast<char>(gray(g.values[pi][col])));
    for (int k = 0; k < bs; ++k) pgm.write(scanline.data(), scanline.size());
  }
  pgm.close();

  const std::string stem = strip_extension(spec.out_path);
  std::ofstream side(stem + ".scale.txt");
  side << "metric " << spec.metric << "\n"
       << "gray 0 = " << g.lo << "\n"
       << "gray 255 = " << g.hi << "\n"
       << "gray(v) = round(255*(v - " << g.lo << ")/(" << g.hi - g.lo
       << "))\n"
       << "axes: gamma rightward, phi upward\n";

  std::ofstream mat(stem + ".matrix.txt");
  mat << ncols;
  for (double gv : g.gammas) mat << " " << gv;
  mat << "\n";
  for (std::size_t pi = 0; pi < g.phis.size(); ++pi) {
    mat << g.phis[pi];
    for (int col = 0; col < ncols; ++col) mat << " " << g.values[pi][col];
    mat << "\n";
  }
}

}  // namespace diskcover
