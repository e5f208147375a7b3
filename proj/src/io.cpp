#include "metric_graphs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "metric_graphs/errors.hpp"

namespace metric_graphs {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) fail(errc::internal_invariant, "double formatting failed");
  return std::string(buf, end);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && p == last;
}

// Splits a CSV line on commas; whitespace around cells is ignored.
std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

// Reads a numeric table; a non-numeric first row is treated as a header.
std::vector<std::vector<double>> read_table(std::istream& in, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    std::vector<std::string> cells = split_cells(stripped);
    std::vector<double> row;
    row.reserve(cells.size());
    bool ok = true;
    for (const auto& cell : cells) {
      double v;
      if (!parse_number(cell, v)) {
        ok = false;
        break;
      }
      row.push_back(v);
    }
    if (!ok) {
      if (first_data_row) {
        first_data_row = false;  // header row
        continue;
      }
      fail(errc::parse, name + ":" + std::to_string(lineno) + ": non-numeric cell");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(errc::parse, name + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(rows.front().size()) + " columns, got " +
                            std::to_string(row.size()));
    }
    first_data_row = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(errc::parse, name + ": no numeric rows");
  return rows;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open " + path.string());
  return in;
}

}  // namespace

PointCloud read_points_csv(std::istream& in, Norm norm, const std::string& name) {
  PointCloud cloud;
  cloud.points = read_table(in, name);
  cloud.norm = norm;
  return cloud;
}

PointCloud read_points_csv(const std::filesystem::path& path, Norm norm) {
  std::ifstream in = open_input(path);
  return read_points_csv(in, norm, path.string());
}

std::vector<std::vector<double>> read_matrix_csv(std::istream& in, const std::string& name) {
  return read_table(in, name);
}

std::vector<std::vector<double>> read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_matrix_csv(in, path.string());
}

void write_points_csv(std::ostream& out, const PointCloud& cloud) {
  for (const auto& point : cloud.points) {
    for (std::size_t c = 0; c < point.size(); ++c) {
      if (c) out << ',';
      out << format_double(point[c]);
    }
    out << '\n';
  }
}

void write_points_csv(const std::filesystem::path& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) fail(errc::parse, "cannot write " + path.string());
  write_points_csv(out, cloud);
}

void write_edge_list(std::ostream& out, const WeightedGraph& graph) {
  for (const auto& e : graph.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_double(graph.weight(e)) << '\n';
  }
}

void write_dot(std::ostream& out, const WeightedGraph& graph, const std::string& name) {
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& e : graph.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << format_double(graph.weight(e))
        << "\"];\n";
  }
  out << "}\n";
}

nlohmann::json space_to_json(const FiniteMetricSpace& space) {
  nlohmann::json lower = nlohmann::json::array();
  for (std::size_t i = 1; i < space.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) lower.push_back(space.dist(i, j));
  }
  nlohmann::json provenance;
  if (space.cloud()) {
    provenance = {{"type", "points"}, {"norm", norm_name(space.cloud()->norm)},
                  {"points", space.cloud()->points}};
  } else {
    provenance = {{"type", "matrix"}};
  }
  return {{"m", space.size()}, {"dist", std::move(lower)}, {"provenance", std::move(provenance)}};
}

namespace {

nlohmann::json edges_to_json(const WeightedGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(nlohmann::json::array({e.u, e.v, graph.weight(e)}));
  }
  return edges;
}

}  // namespace

nlohmann::json graph_to_json(const WeightedGraph& graph) {
  return {{"vertex_count", graph.vertex_count()},
          {"weight_mode", graph.weight_mode() == WeightMode::unit ? "unit" : "distance"},
          {"edges", edges_to_json(graph)}};
}

nlohmann::json trace_to_json(const CsTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    nlohmann::json new_edges = nlohmann::json::array();
    for (const auto& e : step.new_edges) {
      new_edges.push_back(nlohmann::json::array({e.u, e.v, e.weight}));
    }
    steps.push_back({{"components", step.partition.components},
                     {"nu", step.nu},
                     {"new_edges", std::move(new_edges)}});
  }
  return {{"vertex_count", trace.final_graph.vertex_count()},
          {"steps", std::move(steps)},
          {"final_edges", edges_to_json(trace.final_graph)}};
}

nlohmann::json relations_to_json(const RelationsReport& report) {
  nlohmann::json out = {
      {"cs_edges", edges_to_json(report.cs)},
      {"mc_edges", edges_to_json(report.mc)},
      {"sigma_edges", edges_to_json(report.sigma)},
      {"cut_value", report.cut.value},
      {"cut_index", report.cut.index},
      {"class", intrinsic_label_name(report.cls.label)},
      {"cs_steps", report.cs_steps},
      {"relations",
       {{"cs_subset_sigma", report.cs_subset_sigma},
        {"cs_subset_mc", report.cs_subset_mc},
        {"cs_eq_sigma_cap_mc", report.cs_eq_sigma_cap_mc},
        {"sigma_eq_cs", report.sigma_eq_cs},
        {"mc_eq_cs", report.mc_eq_cs},
        {"all_equal", report.all_equal}}},
  };
  if (report.cls.common_length) {
    out["common_length"] = *report.cls.common_length;
  } else {
    out["common_length"] = nullptr;
  }
  return out;
}

}  // namespace metric_graphs
