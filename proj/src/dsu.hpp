#pragma once

#include <cstddef>
#include <vector>

#include "metric_graphs/graph.hpp"

namespace metric_graphs::detail {

// Union-find with path halving. Uniting always keeps the smaller root, so the
// representative of a set is its minimum element.
struct Dsu {
  std::vector<std::size_t> parent;

  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

inline ComponentPartition partition_from_dsu(Dsu& dsu, std::size_t n) {
  ComponentPartition part;
  part.representative.resize(n);
  for (std::size_t v = 0; v < n; ++v) part.representative[v] = dsu.find(v);
  for (std::size_t v = 0; v < n; ++v) {
    if (part.representative[v] == v) part.components.push_back({v});
  }
  std::vector<std::size_t> slot(n, 0);
  for (std::size_t c = 0; c < part.components.size(); ++c) slot[part.components[c][0]] = c;
  for (std::size_t v = 0; v < n; ++v) {
    if (part.representative[v] != v) part.components[slot[part.representative[v]]].push_back(v);
  }
  return part;
}

}  // namespace metric_graphs::detail
