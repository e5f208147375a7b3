#pragma once

#include <cstddef>
#include <vector>

#include "metric_graphs/metric_space.hpp"
#include "metric_graphs/tolerance.hpp"

namespace metric_graphs {

struct Bijection;  // spaces.hpp

// Unit mode reports weight 1 for every edge regardless of the stored
// distances; distance mode reports the stored ones. Both views of the same
// graph share the edge set.
enum class WeightMode { unit, distance };

struct Edge {
  std::size_t u, v;  // u < v
  double weight;     // stored distance; the unit view ignores it
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
inline bool operator<(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

// Undirected simple weighted graph on vertices 0..m-1. Edges are normalized
// (u < v), sorted, and deduplicated at construction, which keeps every
// serialized form byte-stable. Immutable afterwards.
class WeightedGraph {
 public:
  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                WeightMode mode = WeightMode::distance);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  WeightMode weight_mode() const { return mode_; }

  double weight(const Edge& e) const { return mode_ == WeightMode::unit ? 1.0 : e.weight; }
  bool has_edge(std::size_t u, std::size_t v) const;

  // Same graph under the other weight convention.
  WeightedGraph with_mode(WeightMode mode) const;

  // neighbor -> stored weight, sorted by neighbor index.
  const std::vector<std::vector<std::pair<std::size_t, double>>>& adjacency() const {
    return adjacency_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  WeightMode mode_;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency_;
};

// Partition of {0..m-1} into connected components. Component ids are the
// smallest contained vertex; the component list is ordered by id.
struct ComponentPartition {
  std::vector<std::size_t> representative;           // vertex -> component id
  std::vector<std::vector<std::size_t>> components;  // each sorted ascending

  std::size_t count() const { return components.size(); }
  bool same_component(std::size_t a, std::size_t b) const {
    return representative[a] == representative[b];
  }
};

ComponentPartition components(const WeightedGraph& graph);

bool is_connected(const WeightedGraph& graph);

// Connected with exactly m-1 edges.
bool is_tree(const WeightedGraph& graph);

// True iff some component contains a cycle.
bool has_cycle(const WeightedGraph& graph);

// All-pairs shortest-path distances under the active weight mode, as a
// metric space. Throws not_connected.
FiniteMetricSpace path_metric(const WeightedGraph& graph, ToleranceConfig tol = {});

// Edge-set isomorphism under the supplied vertex bijection:
// {i,j} in E(G) <=> {f(i),f(j)} in E(H). Weights are not compared.
bool isomorphic_under(const WeightedGraph& g, const WeightedGraph& h, const Bijection& f);

// E(G) subseteq E(H), same vertex labeling.
bool is_subgraph(const WeightedGraph& g, const WeightedGraph& h);

bool same_edge_set(const WeightedGraph& g, const WeightedGraph& h);

}  // namespace metric_graphs
