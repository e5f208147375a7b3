#include "metric_graphs/constructions.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "dsu.hpp"
#include "metric_graphs/errors.hpp"

namespace metric_graphs {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CsTrace build_cs(const FiniteMetricSpace& space) {
  const std::size_t m = space.size();
  const double tol = space.tol();

  detail::Dsu dsu(m);
  std::size_t comp_count = m;
  std::vector<Edge> all_edges;
  std::vector<CsStep> steps;
  std::vector<std::size_t> slot(m);  // vertex -> component index in this stage

  while (comp_count > 1) {
    ComponentPartition part = detail::partition_from_dsu(dsu, m);
    for (std::size_t c = 0; c < part.components.size(); ++c) {
      for (std::size_t v : part.components[c]) slot[v] = c;
    }

    // nu_i: distance from each component to its nearest outside point.
    std::vector<double> nu(part.count(), kInf);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (slot[i] == slot[j]) continue;
        double d = space.dist(i, j);
        nu[slot[i]] = std::min(nu[slot[i]], d);
        nu[slot[j]] = std::min(nu[slot[j]], d);
      }
    }

    // F(S_{i+1}): every cross pair achieving the minimum of either endpoint's
    // component, ties within tolerance included. Scanning pairs in ascending
    // (i, j) order keeps the batch sorted and duplicate free.
    std::vector<Edge> batch;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (slot[i] == slot[j]) continue;
        double d = space.dist(i, j);
        if (d <= nu[slot[i]] + tol || d <= nu[slot[j]] + tol) batch.push_back({i, j, d});
      }
    }

    const std::size_t before = comp_count;
    for (const auto& e : batch) {
      if (dsu.unite(e.u, e.v)) --comp_count;
    }
    // Every component reaches its nearest neighbour, so the count at least
    // halves; anything else is an implementation bug.
    if (comp_count > before / 2) {
      fail(errc::internal_invariant, "component count did not halve in a CS stage");
    }
    all_edges.insert(all_edges.end(), batch.begin(), batch.end());
    steps.push_back(CsStep{std::move(part), std::move(nu), std::move(batch)});
  }

  return CsTrace{std::move(steps), WeightedGraph(m, std::move(all_edges), WeightMode::distance)};
}

std::pair<WeightedGraph, CutValue> build_mc(const FiniteMetricSpace& space) {
  const std::size_t m = space.size();
  const DistanceSet ds = distance_set(space);

  // Prim on the complete distance graph. Minimum spanning trees are
  // bottleneck optimal, so the largest tree edge (taken through the merged
  // distance set) is the smallest connecting cut value.
  std::vector<double> best(m, kInf);
  std::vector<char> in_tree(m, 0);
  best[0] = 0.0;
  std::size_t cut_index = 0;
  for (std::size_t round = 0; round < m; ++round) {
    std::size_t u = m;
    for (std::size_t v = 0; v < m; ++v) {
      if (!in_tree[v] && (u == m || best[v] < best[u])) u = v;
    }
    in_tree[u] = 1;
    if (round > 0) cut_index = std::max(cut_index, ds.index_of(best[u]));
    for (std::size_t v = 0; v < m; ++v) {
      if (!in_tree[v]) best[v] = std::min(best[v], space.dist(u, v));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double d = space.dist(i, j);
      if (ds.index_of(d) <= cut_index) edges.push_back({i, j, d});
    }
  }
  return {WeightedGraph(m, std::move(edges), WeightMode::distance),
          CutValue{ds.values[cut_index], cut_index}};
}

WeightedGraph build_sigma(const FiniteMetricSpace& space) {
  const std::size_t m = space.size();
  const double tol = space.tol();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = space.dist(i, j);
      bool shortcut = false;
      for (std::size_t z = 0; z < m && !shortcut; ++z) {
        if (z == i || z == j) continue;
        shortcut = nearly_equal(space.dist(i, z) + space.dist(z, j), d, tol);
      }
      if (!shortcut) edges.push_back({i, j, d});
    }
  }
  return WeightedGraph(m, std::move(edges), WeightMode::distance);
}

const char* intrinsic_label_name(IntrinsicLabel label) {
  switch (label) {
    case IntrinsicLabel::extrinsic: return "extrinsic";
    case IntrinsicLabel::intrinsic_i: return "intrinsic-I";
    case IntrinsicLabel::intrinsic_ii: return "intrinsic-II";
  }
  return "?";
}

namespace {

IntrinsicClass classify_from_sigma(const FiniteMetricSpace& space, const WeightedGraph& sigma) {
  const std::size_t m = space.size();
  if (sigma.edge_count() == m * (m - 1) / 2) {
    return IntrinsicClass{IntrinsicLabel::extrinsic, std::nullopt};
  }
  double lo = kInf, hi = -kInf;
  for (const auto& e : sigma.edges()) {
    lo = std::min(lo, e.weight);
    hi = std::max(hi, e.weight);
  }
  if (hi - lo <= space.tol()) {
    return IntrinsicClass{IntrinsicLabel::intrinsic_i, lo};
  }
  return IntrinsicClass{IntrinsicLabel::intrinsic_ii, std::nullopt};
}

}  // namespace

IntrinsicClass classify_intrinsic(const FiniteMetricSpace& space) {
  return classify_from_sigma(space, build_sigma(space));
}

RelationsReport relations_report(const FiniteMetricSpace& space) {
  CsTrace trace = build_cs(space);
  auto [mc, cut] = build_mc(space);
  WeightedGraph sigma = build_sigma(space);
  IntrinsicClass cls = classify_from_sigma(space, sigma);

  const WeightedGraph& cs = trace.final_graph;
  bool cs_subset_sigma = is_subgraph(cs, sigma);
  bool cs_subset_mc = is_subgraph(cs, mc);
  if (!cs_subset_sigma || !cs_subset_mc) {
    fail(errc::internal_invariant, "CS is not a subgraph of Sigma and MC");
  }

  std::vector<Edge> cap_edges;
  std::set_intersection(sigma.edges().begin(), sigma.edges().end(), mc.edges().begin(),
                        mc.edges().end(), std::back_inserter(cap_edges));
  WeightedGraph cap(space.size(), std::move(cap_edges), WeightMode::distance);

  bool cs_eq_cap = same_edge_set(cs, cap);
  bool sigma_eq_cs = same_edge_set(sigma, cs);
  bool mc_eq_cs = same_edge_set(mc, cs);

  return RelationsReport{std::move(trace.final_graph),
                         std::move(mc),
                         std::move(sigma),
                         cut,
                         cls,
                         trace.steps.size(),
                         cs_subset_sigma,
                         cs_subset_mc,
                         cs_eq_cap,
                         sigma_eq_cs,
                         mc_eq_cs,
                         sigma_eq_cs && mc_eq_cs};
}

}  // namespace metric_graphs
