#include "metric_graphs/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "dsu.hpp"
#include "metric_graphs/errors.hpp"
#include "metric_graphs/spaces.hpp"

namespace metric_graphs {

using detail::Dsu;
using detail::partition_from_dsu;

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges, WeightMode mode)
    : vertex_count_(vertex_count), edges_(std::move(edges)), mode_(mode) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      fail(errc::internal_invariant, "loop edge at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= vertex_count_) {
      fail(errc::size_mismatch, "edge endpoint " + std::to_string(e.v) +
                                    " outside vertex range 0.." +
                                    std::to_string(vertex_count_ ? vertex_count_ - 1 : 0));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    fail(errc::internal_invariant, "parallel edge {" + std::to_string(dup->u) + "," +
                                       std::to_string(dup->v) + "}");
  }
  adjacency_.resize(vertex_count_);
  for (const auto& e : edges_) {
    adjacency_[e.u].emplace_back(e.v, e.weight);
    adjacency_[e.v].emplace_back(e.u, e.weight);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool WeightedGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  Edge probe{u, v, 0.0};
  return std::binary_search(edges_.begin(), edges_.end(), probe);
}

WeightedGraph WeightedGraph::with_mode(WeightMode mode) const {
  WeightedGraph copy = *this;
  copy.mode_ = mode;
  return copy;
}

ComponentPartition components(const WeightedGraph& graph) {
  Dsu dsu(graph.vertex_count());
  for (const auto& e : graph.edges()) dsu.unite(e.u, e.v);
  return partition_from_dsu(dsu, graph.vertex_count());
}

bool is_connected(const WeightedGraph& graph) {
  if (graph.vertex_count() == 0) return true;
  Dsu dsu(graph.vertex_count());
  std::size_t merges = 0;
  for (const auto& e : graph.edges()) {
    if (dsu.unite(e.u, e.v)) ++merges;
  }
  return merges + 1 == graph.vertex_count();
}

bool is_tree(const WeightedGraph& graph) {
  return is_connected(graph) && graph.edge_count() + 1 == graph.vertex_count();
}

bool has_cycle(const WeightedGraph& graph) {
  // A simple graph has a cycle iff some edge closes an existing connection;
  // loops and parallels are excluded at construction, so any such cycle has
  // at least 3 distinct vertices.
  Dsu dsu(graph.vertex_count());
  for (const auto& e : graph.edges()) {
    if (!dsu.unite(e.u, e.v)) return true;
  }
  return false;
}

FiniteMetricSpace path_metric(const WeightedGraph& graph, ToleranceConfig tol) {
  const std::size_t n = graph.vertex_count();
  if (n < 2) fail(errc::size_mismatch, "path metric needs at least 2 vertices");
  if (!is_connected(graph)) fail(errc::not_connected, "graph is not connected");

  const bool unit = graph.weight_mode() == WeightMode::unit;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> table(n * n, 0.0);
  std::vector<double> dist(n);

  using Item = std::pair<double, std::size_t>;
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[src] = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[v]) continue;
      for (const auto& [nbr, w] : graph.adjacency()[v]) {
        double nd = d + (unit ? 1.0 : w);
        if (nd < dist[nbr]) {
          dist[nbr] = nd;
          heap.emplace(nd, nbr);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) table[src * n + v] = dist[v];
  }
  // Shortest-path distances satisfy the metric axioms by construction
  // (weights are positive and the graph is connected).
  return FiniteMetricSpace::from_table_unchecked(std::move(table), n, tol);
}

bool isomorphic_under(const WeightedGraph& g, const WeightedGraph& h, const Bijection& f) {
  if (g.vertex_count() != h.vertex_count() || f.size() != g.vertex_count()) {
    fail(errc::size_mismatch, "isomorphism check needs equal vertex counts");
  }
  f.validate();
  if (g.edge_count() != h.edge_count()) return false;
  for (const auto& e : g.edges()) {
    if (!h.has_edge(f(e.u), f(e.v))) return false;
  }
  return true;
}

bool is_subgraph(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) {
    fail(errc::size_mismatch, "subgraph check needs equal vertex counts");
  }
  for (const auto& e : g.edges()) {
    if (!h.has_edge(e.u, e.v)) return false;
  }
  return true;
}

bool same_edge_set(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) {
    fail(errc::size_mismatch, "edge-set comparison needs equal vertex counts");
  }
  if (g.edge_count() != h.edge_count()) return false;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!(g.edges()[k] == h.edges()[k])) return false;
  }
  return true;
}

}  // namespace metric_graphs
