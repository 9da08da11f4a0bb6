// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations working from the raw edge list and a
// dense weight matrix. They share no code path with the library beyond the
// Graph container itself.

#ifndef MWMCDS_TESTS_ORACLES_HPP
#define MWMCDS_TESTS_ORACLES_HPP

#include <limits>
#include <numeric>
#include <vector>

#include "mwmcds/graph.hpp"

namespace mwmcds::testing {

struct DenseGraph {
  std::size_t n = 0;
  // 0 means "no edge"; weights are strictly positive.
  std::vector<std::vector<double>> w;

  explicit DenseGraph(const Graph& g) : n(g.vertex_count()), w(n, std::vector<double>(n, 0.0)) {
    for (const auto& e : g.edges()) {
      w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.w;
      w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.w;
    }
  }
  bool adjacent(std::size_t u, std::size_t v) const { return w[u][v] > 0.0; }
};

inline bool oracle_dominating(const DenseGraph& d, const std::vector<bool>& in) {
  for (std::size_t v = 0; v < d.n; ++v) {
    if (in[v]) continue;
    bool covered = false;
    for (std::size_t u = 0; u < d.n; ++u) covered = covered || (in[u] && d.adjacent(u, v));
    if (!covered) return false;
  }
  return true;
}

// Union-find over induced edges.
inline bool oracle_connected(const DenseGraph& d, const std::vector<bool>& in) {
  std::vector<std::size_t> parent(d.n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t members = 0;
  for (std::size_t u = 0; u < d.n; ++u) {
    if (!in[u]) continue;
    ++members;
    for (std::size_t v = u + 1; v < d.n; ++v) {
      if (in[v] && d.adjacent(u, v)) parent[find(u)] = find(v);
    }
  }
  if (members == 0) return false;
  std::size_t roots = 0;
  for (std::size_t u = 0; u < d.n; ++u) roots += (in[u] && find(u) == u) ? 1 : 0;
  return roots == 1;
}

inline bool oracle_cds(const DenseGraph& d, const std::vector<bool>& in) {
  return oracle_dominating(d, in) && oracle_connected(d, in);
}

struct OracleWeight {
  double f_w1 = 0.0;
  double f_w2 = 0.0;
  double f_w = 0.0;
};

// Both sums run in increasing (u, v) order, matching the canonical edge order.
inline OracleWeight oracle_weight(const DenseGraph& d, const std::vector<bool>& in) {
  OracleWeight out;
  for (std::size_t u = 0; u < d.n; ++u) {
    for (std::size_t v = u + 1; v < d.n; ++v) {
      if (in[u] && in[v] && d.adjacent(u, v)) out.f_w1 += d.w[u][v];
    }
  }
  for (std::size_t u = 0; u < d.n; ++u) {
    if (in[u]) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < d.n; ++v) {
      if (in[v] && d.adjacent(u, v) && d.w[u][v] < best) best = d.w[u][v];
    }
    out.f_w2 += best;
  }
  out.f_w = out.f_w1 + out.f_w2;
  return out;
}

inline std::vector<bool> flags_of(const VertexSet& s) {
  std::vector<bool> in(s.universe());
  for (std::size_t v = 0; v < s.universe(); ++v) in[v] = s.contains(static_cast<VertexId>(v));
  return in;
}

inline std::vector<bool> flags_of_mask(std::size_t n, unsigned long long mask) {
  std::vector<bool> in(n);
  for (std::size_t v = 0; v < n; ++v) in[v] = ((mask >> v) & 1ULL) != 0;
  return in;
}

}  // namespace mwmcds::testing

#endif  // MWMCDS_TESTS_ORACLES_HPP
