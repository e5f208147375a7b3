#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"  // nlohmann/json, vendored

#include "metric_graphs/constructions.hpp"
#include "metric_graphs/graph.hpp"
#include "metric_graphs/metric_space.hpp"
#include "metric_graphs/point_cloud.hpp"

namespace metric_graphs {

// Shortest representation that parses back to the same double.
std::string format_double(double value);

// One point per row, N numeric columns, optional header row.
PointCloud read_points_csv(const std::filesystem::path& path, Norm norm);
PointCloud read_points_csv(std::istream& in, Norm norm, const std::string& name = "<stream>");

std::vector<std::vector<double>> read_matrix_csv(const std::filesystem::path& path);
std::vector<std::vector<double>> read_matrix_csv(std::istream& in,
                                                 const std::string& name = "<stream>");

void write_points_csv(std::ostream& out, const PointCloud& cloud);
void write_points_csv(const std::filesystem::path& path, const PointCloud& cloud);

// "u v weight" per line, weights at full precision (unit view writes 1).
void write_edge_list(std::ostream& out, const WeightedGraph& graph);

// Graphviz rendering with weights as edge labels.
void write_dot(std::ostream& out, const WeightedGraph& graph, const std::string& name = "G");

nlohmann::json space_to_json(const FiniteMetricSpace& space);
nlohmann::json graph_to_json(const WeightedGraph& graph);
nlohmann::json trace_to_json(const CsTrace& trace);
nlohmann::json relations_to_json(const RelationsReport& report);

}  // namespace metric_graphs
