// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "mwmcds/kernels.hpp"

namespace mwmcds {

std::string_view to_string(GraphErrorKind kind) noexcept {
  switch (kind) {
    case GraphErrorKind::Parse: return "parse";
    case GraphErrorKind::EmptyGraph: return "empty-graph";
    case GraphErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case GraphErrorKind::SelfLoop: return "self-loop";
    case GraphErrorKind::DuplicateEdge: return "duplicate-edge";
    case GraphErrorKind::NonPositiveWeight: return "non-positive-weight";
    case GraphErrorKind::Disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

// Number of vertices reached from `start` when walking only through members
// of `allowed` (nullptr: every vertex).
std::size_t reach_count(const Graph& g, VertexId start, const VertexSet* allowed) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const VertexId u : g.neighbors(v)) {
      auto& mark = seen[static_cast<std::size_t>(u)];
      if (mark != 0 || (allowed != nullptr && !allowed->contains(u))) continue;
      mark = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw GraphError(GraphErrorKind::EmptyGraph, "graph has no vertices");
  if (n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) {
    throw GraphError(GraphErrorKind::VertexOutOfRange, "too many vertices: " + std::to_string(n));
  }

  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw GraphError(GraphErrorKind::NonPositiveWeight,
                       "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") has non-positive weight " + std::to_string(e.w));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge (" +
                                                          std::to_string(edges[i].u) + "," +
                                                          std::to_string(edges[i].v) + ")");
    }
  }

  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
    ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges.size());
  g.weights_.resize(2 * edges.size());
  // Edges are sorted, so every row fills in increasing neighbor order.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    auto& cu = cursor[static_cast<std::size_t>(e.u)];
    g.adjacency_[cu] = e.v;
    g.weights_[cu++] = e.w;
    auto& cv = cursor[static_cast<std::size_t>(e.v)];
    g.adjacency_[cv] = e.u;
    g.weights_[cv++] = e.w;
  }
  for (const auto& e : edges) g.total_weight_ += e.w;
  g.edges_ = std::move(edges);

  if (reach_count(g, 0, nullptr) != n) {
    throw GraphError(GraphErrorKind::Disconnected, "graph is not connected");
  }
  return g;
}

std::optional<double> Graph::weight(VertexId u, VertexId v) const noexcept {
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return neighbor_weights(u)[static_cast<std::size_t>(it - row.begin())];
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  const auto& k = kernels::active();
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    const auto row = g.neighbors(v);
    if (k.count_members(row.data(), row.size(), s.data()) == 0) return false;
  }
  return true;
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  const auto n = static_cast<VertexId>(g.vertex_count());
  VertexId start = 0;
  while (start < n && !s.contains(start)) ++start;
  return reach_count(g, start, &s) == s.size();
}

VertexSet articulation_vertices_of_induced(const Graph& g, const VertexSet& s) {
  if (!is_connected_induced(g, s)) {
    throw std::invalid_argument("articulation_vertices_of_induced: induced subgraph not connected");
  }
  const std::size_t n = g.vertex_count();
  VertexSet cut(n);
  if (s.size() <= 2) return cut;

  // Iterative Tarjan low-link over the induced subgraph.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;  // index into the adjacency row
  };
  std::vector<Frame> stack;

  VertexId root = 0;
  while (!s.contains(root)) ++root;
  std::size_t timer = 0;
  std::size_t root_children = 0;
  disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
  stack.push_back({root, -1, 0});

  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto row = g.neighbors(f.v);
    if (f.next < row.size()) {
      const VertexId u = row[f.next++];
      if (!s.contains(u) || u == f.parent) continue;
      const auto ui = static_cast<std::size_t>(u);
      if (disc[ui] == kUnvisited) {
        disc[ui] = low[ui] = timer++;
        if (f.v == root) ++root_children;
        stack.push_back({u, f.v, 0});
      } else {
        auto& lv = low[static_cast<std::size_t>(f.v)];
        lv = std::min(lv, disc[ui]);
      }
      continue;
    }
    const VertexId child = f.v;
    const VertexId parent = f.parent;
    stack.pop_back();
    if (parent < 0) continue;
    const auto ci = static_cast<std::size_t>(child);
    const auto pi = static_cast<std::size_t>(parent);
    low[pi] = std::min(low[pi], low[ci]);
    if (parent != root && low[ci] >= disc[pi]) cut.insert(parent);
  }
  if (root_children > 1) cut.insert(root);
  return cut;
}

}  // namespace mwmcds
