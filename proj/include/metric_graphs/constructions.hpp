#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metric_graphs/graph.hpp"
#include "metric_graphs/metric_space.hpp"

namespace metric_graphs {

// One inductive stage of the CS construction: the component partition K_i
// before the step, the per-component nearest-outside distance nu_i (parallel
// to partition.components), and the batch of edges the step contributes.
struct CsStep {
  ComponentPartition partition;
  std::vector<double> nu;
  std::vector<Edge> new_edges;
};

struct CsTrace {
  std::vector<CsStep> steps;
  WeightedGraph final_graph;  // distance mode; unit view via with_mode
};

// The inductive connected-sparse construction. Stage 0 joins every vertex to
// all of its nearest neighbours; stage i+1 joins every component to all
// points realizing its minimum outside distance; ties within the space's
// tolerance are all included, so no choices are made at any stage. Stops as
// soon as the graph is connected.
CsTrace build_cs(const FiniteMetricSpace& space);

// The cut value defining MC: smallest distance-set value whose threshold
// graph is connected. index is the position in the distance set (0 names the
// zero value).
struct CutValue {
  double value;
  std::size_t index;
};

// Threshold graph at the smallest connecting cut value: all pairs {x,y} with
// d(x,y) <= cut, computed through the merged distance set so tolerance ties
// enter or leave as one block. The cut equals the bottleneck (largest) edge
// of a minimum spanning tree.
std::pair<WeightedGraph, CutValue> build_mc(const FiniteMetricSpace& space);

// Smallest graph on M whose distance-weighted path metric reproduces d.
// Edge {x,y} survives iff no third point z attains d(x,z)+d(z,y) = d(x,y)
// within tolerance. Testing only count-2 shortcuts suffices: a geodesic of
// count >= 2 splits at its first intermediate vertex into a count-2 witness
// for one of its edges, so closure under all shortcut lengths follows.
WeightedGraph build_sigma(const FiniteMetricSpace& space);

enum class IntrinsicLabel { extrinsic, intrinsic_i, intrinsic_ii };

const char* intrinsic_label_name(IntrinsicLabel label);

// extrinsic: Sigma = K_m. intrinsic-I: Sigma != K_m with all edge lengths
// equal (common_length holds the smallest). intrinsic-II: otherwise.
struct IntrinsicClass {
  IntrinsicLabel label;
  std::optional<double> common_length;
};

IntrinsicClass classify_intrinsic(const FiniteMetricSpace& space);

struct RelationsReport {
  WeightedGraph cs;
  WeightedGraph mc;
  WeightedGraph sigma;
  CutValue cut;
  IntrinsicClass cls;
  std::size_t cs_steps;
  bool cs_subset_sigma;
  bool cs_subset_mc;
  bool cs_eq_sigma_cap_mc;
  bool sigma_eq_cs;
  bool mc_eq_cs;
  bool all_equal;
};

// Builds all three graphs and reports their inclusion structure. CS must be
// a subgraph of both Sigma and MC for every valid input; a violation signals
// an implementation bug and raises internal_invariant.
RelationsReport relations_report(const FiniteMetricSpace& space);

}  // namespace metric_graphs
