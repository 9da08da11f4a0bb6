// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_TESTS_FIXTURES_HPP
#define MWMCDS_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "mwmcds/graph.hpp"

namespace mwmcds::testing {

// 0-1-2-3 with weights 1, 2, 3.
inline Graph path4() { return Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}}); }

inline Graph path4_unit() { return Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}); }

// Center 0, leaves 1..leaves.
inline Graph star(int leaves, double w = 1.0) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, w});
  return Graph::from_edges(static_cast<std::size_t>(leaves) + 1, std::move(edges));
}

inline Graph triangle() { return Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

inline Graph single_vertex() { return Graph::from_edges(1, {}); }

inline VertexSet set_of(const Graph& g, std::initializer_list<VertexId> ids) {
  return VertexSet::from_members(g.vertex_count(), std::vector<VertexId>(ids));
}

// Connected test graph: random spanning tree plus each remaining pair with
// probability `density`. Kept separate from the instance generator so that
// the code under test does not build its own inputs.
inline Graph random_connected(std::mt19937_64& rng, std::size_t n, double density,
                              bool fractional_weights = false) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto weight = [&] {
    if (fractional_weights) return 0.05 + unit(rng) * 10.0;
    return static_cast<double>(std::uniform_int_distribution<int>(1, 20)(rng));
  };
  for (std::size_t v = 1; v < n; ++v) {
    const auto u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    present[u][v] = present[v][u] = true;
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), weight()});
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!present[u][v] && unit(rng) < density) {
        present[u][v] = present[v][u] = true;
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), weight()});
      }
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

inline VertexSet from_mask(std::size_t n, unsigned long long mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1ULL) s.insert(static_cast<VertexId>(v));
  }
  return s;
}

}  // namespace mwmcds::testing

#endif  // MWMCDS_TESTS_FIXTURES_HPP
