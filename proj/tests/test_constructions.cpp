#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "metric_graphs/constructions.hpp"
#include "metric_graphs/errors.hpp"
#include "metric_graphs/spaces.hpp"
#include "test_util.hpp"

using namespace metric_graphs;
using namespace test_util;

namespace {

// Independent MC oracle: insert pairs sorted by merged distance index until
// the graph connects, then close under the reached index.
struct McOracle {
  EdgeSet edges;
  double cut_value;
  std::size_t cut_index;
};

McOracle mc_oracle(const FiniteMetricSpace& space) {
  const std::size_t m = space.size();
  const DistanceSet ds = distance_set(space);

  struct Pair {
    std::size_t index, u, v;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back({ds.index_of(space.dist(i, j)), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return a.index != b.index ? a.index < b.index : (a.u != b.u ? a.u < b.u : a.v < b.v);
  });

  std::vector<std::size_t> parent(m);
  for (std::size_t v = 0; v < m; ++v) parent[v] = v;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t merges = 0;
  std::size_t cut = 0;
  for (const auto& p : pairs) {
    std::size_t a = find(p.u), b = find(p.v);
    if (a != b) {
      parent[a] = b;
      ++merges;
      cut = p.index;
      if (merges + 1 == m) break;
    }
  }
  McOracle out;
  out.cut_index = cut;
  out.cut_value = ds.values[cut];
  for (const auto& p : pairs) {
    if (p.index <= cut) out.edges.insert({p.u, p.v});
  }
  return out;
}

std::map<std::size_t, std::size_t> component_slots(const ComponentPartition& part) {
  std::map<std::size_t, std::size_t> slot;  // representative -> index
  for (std::size_t c = 0; c < part.components.size(); ++c) slot[part.components[c][0]] = c;
  return slot;
}

// Path metric of a random tree with the given weight picker.
template <typename PickWeight>
FiniteMetricSpace random_tree_space(std::size_t n, std::uint64_t seed, PickWeight&& pick) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.push_back({rng.below(v), v, pick(rng)});
  }
  return path_metric(WeightedGraph(n, std::move(edges)));
}

}  // namespace

TEST_SUITE_BEGIN("constructions");

TEST_CASE("build_cs: tie table connects in one stage") {
  auto trace = build_cs(tie_table_space());
  CHECK(edge_pairs(trace.final_graph) == EdgeSet{{0, 1}, {1, 2}, {2, 3}});
  CHECK(trace.steps.size() == 1);
  CHECK(trace.final_graph.edges()[0].weight == 1.0);
  CHECK(trace.final_graph.edges()[1].weight == 2.0);
  CHECK(trace.final_graph.edges()[2].weight == 3.0);
  CHECK(is_tree(trace.final_graph));
}

TEST_CASE("build_cs: line+apex cloud gives the star at the middle point") {
  auto space = FiniteMetricSpace::from_points(four_point_cloud());
  auto trace = build_cs(space);
  CHECK(edge_pairs(trace.final_graph) == EdgeSet{{0, 1}, {1, 2}, {1, 3}});

  auto [mc, cut] = build_mc(space);
  CHECK(edge_pairs(mc) == edge_pairs(trace.final_graph));
}

TEST_CASE("build_cs: diagonal-basis sweep") {
  const std::size_t n = 3;
  const double threshold = diagonal_basis_threshold(n);
  const EdgeSet star{{0, 1}, {0, 2}, {0, 3}};
  const EdgeSet complete{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

  auto cs_at = [&](double x, ToleranceConfig tol = {}) {
    auto space = FiniteMetricSpace::from_points(diagonal_basis_cloud(n, x), tol);
    return edge_pairs(build_cs(space).final_graph);
  };

  CHECK(cs_at(0.0) == star);
  CHECK(cs_at(-0.05) == star);
  CHECK(cs_at(threshold) == complete);           // exact tie regime
  CHECK(cs_at(threshold - 0.1) == complete);     // strictly below
  // slightly above threshold stays a star at default tolerance
  CHECK(cs_at(threshold + 1e-3) == star);
  // 1e-6 below the threshold realizes the tie under a 1e-4 tolerance
  CHECK(cs_at(threshold - 1e-6, ToleranceConfig{1e-4, ToleranceConfig::Scale::absolute}) ==
        complete);
}

TEST_CASE("build_cs: multi-stage trace bookkeeping") {
  // Two tight pairs far apart: stage 1 forms the pairs, stage 2 joins them.
  auto space = FiniteMetricSpace::from_points(
      PointCloud{{{0.0}, {1.0}, {10.0}, {11.5}}, Norm::l2});
  auto trace = build_cs(space);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].partition.count() == 4);
  CHECK(trace.steps[1].partition.count() == 2);
  CHECK(edge_pairs(trace.final_graph) == EdgeSet{{0, 1}, {1, 2}, {2, 3}});
  CHECK(trace.steps[1].new_edges.size() == 1);
  CHECK(trace.steps[1].new_edges[0].u == 1);
  CHECK(trace.steps[1].new_edges[0].v == 2);
  CHECK(trace.steps[1].nu == std::vector<double>{9.0, 9.0});
}

TEST_CASE("build_cs: trace invariants over random clouds") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto cloud = sample_cloud(SampleModel::uniform_cube(3, 1.0), 16, seed + 100);
    auto space = FiniteMetricSpace::from_points(cloud);
    auto trace = build_cs(space);

    CHECK(trace.steps.front().partition.count() == space.size());
    // |K_{i+1}| <= |K_i| / 2 across recorded stages, down to one component
    for (std::size_t s = 1; s < trace.steps.size(); ++s) {
      CHECK(trace.steps[s].partition.count() * 2 <= trace.steps[s - 1].partition.count());
    }
    CHECK(2 <= trace.steps.back().partition.count());

    // batches are disjoint and their union is E(CS)
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t total = 0;
    for (const auto& step : trace.steps) {
      auto slots = component_slots(step.partition);
      for (const auto& e : step.new_edges) {
        CHECK(seen.insert({e.u, e.v}).second);
        ++total;
        // Prop 2.3(ii): endpoints in distinct components, d = max of the nus
        std::size_t cu = step.partition.representative[e.u];
        std::size_t cv = step.partition.representative[e.v];
        CHECK(cu != cv);
        double nu_u = step.nu[slots.at(cu)];
        double nu_v = step.nu[slots.at(cv)];
        CHECK(std::fabs(e.weight - std::max(nu_u, nu_v)) <= space.tol());
      }
    }
    CHECK(total == trace.final_graph.edge_count());
    CHECK(seen == edge_pairs(trace.final_graph));
    CHECK(components(trace.final_graph).count() == 1);

    // distance-separated inputs join each component pair at most once per stage
    if (is_distance_separated(space)) {
      for (const auto& step : trace.steps) {
        std::set<std::pair<std::size_t, std::size_t>> joined;
        for (const auto& e : step.new_edges) {
          std::size_t cu = step.partition.representative[e.u];
          std::size_t cv = step.partition.representative[e.v];
          if (cu > cv) std::swap(cu, cv);
          CHECK(joined.insert({cu, cv}).second);
        }
      }
      CHECK(is_tree(trace.final_graph));
    }
  }
}

TEST_CASE("build_cs halving bound from the first stage") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto cloud = sample_cloud(SampleModel::uniform_cube(2, 1.0), 15, seed + 500);
    auto trace = build_cs(FiniteMetricSpace::from_points(cloud));
    REQUIRE(!trace.steps.empty());
    if (trace.steps.size() > 1) {
      CHECK(trace.steps[1].partition.count() <= 15 / 2);
    }
  }
}

TEST_CASE("build_mc: tie table") {
  auto [mc, cut] = build_mc(tie_table_space());
  CHECK(edge_pairs(mc) == EdgeSet{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(cut.value == 3.0);
  CHECK(cut.index == 3);
}

TEST_CASE("build_mc: two points") {
  auto space = FiniteMetricSpace::from_points(PointCloud{{{0}, {5}}, Norm::l2});
  auto [mc, cut] = build_mc(space);
  CHECK(edge_pairs(mc) == EdgeSet{{0, 1}});
  CHECK(cut.value == 5.0);
  CHECK(cut.index == 1);
}

TEST_CASE("build_mc agrees with the incremental oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto cloud = sample_cloud(SampleModel::uniform_cube(3, 1.0), 10, seed + 42);
    auto space = FiniteMetricSpace::from_points(cloud);
    auto [mc, cut] = build_mc(space);
    auto oracle = mc_oracle(space);
    CHECK(edge_pairs(mc) == oracle.edges);
    CHECK(cut.value == oracle.cut_value);
    CHECK(cut.index == oracle.cut_index);
  }
  // tied inputs as well
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto cloud = sample_cloud(SampleModel::grid(2, 4), 12, seed);
    auto space = FiniteMetricSpace::from_points(cloud);
    auto [mc, cut] = build_mc(space);
    auto oracle = mc_oracle(space);
    CHECK(edge_pairs(mc) == oracle.edges);
    CHECK(cut.value == oracle.cut_value);
  }
}

TEST_CASE("build_sigma: tie table keeps the long apex edge") {
  auto sigma = build_sigma(tie_table_space());
  CHECK(edge_pairs(sigma) == EdgeSet{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("build_sigma: right-angle triple under the three norms") {
  auto l1 = build_sigma(FiniteMetricSpace::from_points(triangle_cloud(Norm::l1)));
  CHECK(edge_pairs(l1) == EdgeSet{{0, 1}, {1, 2}});

  auto l2 = build_sigma(FiniteMetricSpace::from_points(triangle_cloud(Norm::l2)));
  CHECK(edge_pairs(l2) == EdgeSet{{0, 1}, {0, 2}, {1, 2}});

  auto linf = build_sigma(FiniteMetricSpace::from_points(triangle_cloud(Norm::linf)));
  CHECK(linf.edge_count() == 3);
}

TEST_CASE("build_sigma: line+apex cloud has five edges") {
  auto sigma = build_sigma(FiniteMetricSpace::from_points(four_point_cloud()));
  CHECK(edge_pairs(sigma) == EdgeSet{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::multiset<double> weights;
  for (const auto& e : sigma.edges()) weights.insert(e.weight);
  std::multiset<double> expected{1.0, 1.0, 1.0, std::sqrt(2.0), std::sqrt(2.0)};
  REQUIRE(weights.size() == 5);
  auto it = weights.begin();
  auto jt = expected.begin();
  for (; it != weights.end(); ++it, ++jt) CHECK(*it == doctest::Approx(*jt).epsilon(1e-12));
}

TEST_CASE("classify_intrinsic") {
  auto l1 = classify_intrinsic(FiniteMetricSpace::from_points(triangle_cloud(Norm::l1)));
  CHECK(l1.label == IntrinsicLabel::intrinsic_i);
  REQUIRE(l1.common_length.has_value());
  CHECK(*l1.common_length == doctest::Approx(1.0).epsilon(1e-12));

  auto l2 = classify_intrinsic(FiniteMetricSpace::from_points(triangle_cloud(Norm::l2)));
  CHECK(l2.label == IntrinsicLabel::extrinsic);
  CHECK_FALSE(l2.common_length.has_value());

  auto linf = classify_intrinsic(FiniteMetricSpace::from_points(triangle_cloud(Norm::linf)));
  CHECK(linf.label == IntrinsicLabel::extrinsic);

  auto apex = classify_intrinsic(FiniteMetricSpace::from_points(four_point_cloud()));
  CHECK(apex.label == IntrinsicLabel::intrinsic_ii);
}

TEST_CASE("relations_report: tie table") {
  auto report = relations_report(tie_table_space());
  CHECK(report.cs_subset_sigma);
  CHECK(report.cs_subset_mc);
  CHECK(report.cs_eq_sigma_cap_mc);
  CHECK_FALSE(report.sigma_eq_cs);
  CHECK_FALSE(report.mc_eq_cs);
  CHECK_FALSE(report.all_equal);
  CHECK(report.cls.label == IntrinsicLabel::intrinsic_ii);
  CHECK(report.cut.value == 3.0);
}

TEST_CASE("relations_report: intrinsic-I triple collapses everything") {
  auto report = relations_report(FiniteMetricSpace::from_points(triangle_cloud(Norm::l1)));
  CHECK(report.all_equal);
  CHECK(report.cls.label == IntrinsicLabel::intrinsic_i);
}

TEST_CASE("relations_report: two points") {
  auto space = FiniteMetricSpace::from_points(PointCloud{{{0}, {5}}, Norm::l2});
  auto report = relations_report(space);
  CHECK(report.all_equal);
  CHECK(report.cs.edge_count() == 1);
}

TEST_CASE("distance-separated clouds always yield CS trees") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto cloud = sample_cloud(SampleModel::uniform_cube(3, 1.0), 20, seed + 1000);
    auto space = FiniteMetricSpace::from_points(cloud);
    if (!is_distance_separated(space)) continue;
    ++checked;
    CHECK(is_tree(build_cs(space).final_graph));
  }
  CHECK(checked >= 95);  // continuous sampling is a.s. separated
}

TEST_CASE("sigma path metric reproduces the original distances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Norm norm = seed % 3 == 0 ? Norm::l1 : (seed % 3 == 1 ? Norm::l2 : Norm::linf);
    auto cloud = sample_cloud(SampleModel::uniform_cube(2, 1.0), 12, seed + 77);
    cloud.norm = norm;
    auto space = FiniteMetricSpace::from_points(cloud);
    auto sigma = build_sigma(space);
    auto back = path_metric(sigma);
    double bound = 1e-9 * space.diameter();
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t j = 0; j < space.size(); ++j) {
        CHECK(std::fabs(back.dist(i, j) - space.dist(i, j)) <= bound);
      }
    }

    // any graph between Sigma and K_m reproduces d as well
    Rng rng(seed);
    std::vector<Edge> extra = sigma.edges();
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t j = i + 1; j < space.size(); ++j) {
        if (!sigma.has_edge(i, j) && rng.uniform01() < 0.3) {
          extra.push_back({i, j, space.dist(i, j)});
        }
      }
    }
    auto bigger = path_metric(WeightedGraph(space.size(), std::move(extra)));
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t j = 0; j < space.size(); ++j) {
        CHECK(std::fabs(bigger.dist(i, j) - space.dist(i, j)) <= bound);
      }
    }
  }
}

TEST_CASE("Thm 7.1(ii): intrinsic-I spaces collapse CS, MC, Sigma") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto space = random_tree_space(8, seed, [](Rng&) { return 1.0; });
    auto cls = classify_intrinsic(space);
    REQUIRE(cls.label == IntrinsicLabel::intrinsic_i);
    auto report = relations_report(space);
    CHECK(report.all_equal);
  }
}

TEST_CASE("Thm 7.1(iii): intrinsic-II tree Sigma forces CS = Sigma") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto space = random_tree_space(8, seed + 31, [](Rng& r) { return r.uniform(0.5, 2.0); });
    auto sigma = build_sigma(space);
    auto cls = classify_intrinsic(space);
    if (cls.label != IntrinsicLabel::intrinsic_ii || !is_tree(sigma)) continue;
    CHECK(same_edge_set(build_cs(space).final_graph, sigma));
  }
}

TEST_CASE("Thm 7.1(i): CS below Sigma and MC, tied inputs included") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto cloud = seed % 2 == 0 ? sample_cloud(SampleModel::uniform_cube(3, 1.0), 14, seed)
                               : sample_cloud(SampleModel::grid(2, 4), 14, seed);
    auto space = FiniteMetricSpace::from_points(cloud);
    auto cs = build_cs(space).final_graph;
    CHECK(is_subgraph(cs, build_sigma(space)));
    CHECK(is_subgraph(cs, build_mc(space).first));
  }
}

TEST_SUITE_END();
