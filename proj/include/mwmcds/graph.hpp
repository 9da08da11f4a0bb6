// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_GRAPH_HPP
#define MWMCDS_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

struct Edge {
  VertexId u;
  VertexId v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  Parse,
  EmptyGraph,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  NonPositiveWeight,
  Disconnected,
};

std::string_view to_string(GraphErrorKind kind) noexcept;

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  GraphErrorKind kind() const noexcept { return kind_; }
  /// 1-based line of the instance text the error refers to, or 0.
  std::size_t line() const noexcept { return line_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
};

/// Immutable, connected, simple undirected graph with positive edge weights.
///
/// Edges are stored canonically (u < v, sorted lexicographically) and each
/// adjacency row is sorted by neighbor id, so every traversal order is a pure
/// function of the edge set.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on any violated invariant.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  double total_weight() const noexcept { return total_weight_; }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    const auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const double> neighbor_weights(VertexId v) const noexcept {
    const auto i = static_cast<std::size_t>(v);
    return {weights_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t degree(VertexId v) const noexcept {
    const auto i = static_cast<std::size_t>(v);
    return offsets_[i + 1] - offsets_[i];
  }

  std::optional<double> weight(VertexId u, VertexId v) const noexcept;

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
};

/// Parses the "n m" + "u v w" edge-list text format. Lines starting with '#'
/// and blank lines are ignored. Files whose ids lie in 1..n and never use 0 are
/// read as 1-based and shifted down.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Inverse of load_graph (0-based ids). `header_comments` are emitted as
/// "# " lines before the header.
std::string write_graph(const Graph& g, std::span<const std::string> header_comments = {});

bool is_dominating(const Graph& g, const VertexSet& s);

/// False for the empty set; a single vertex is connected.
bool is_connected_induced(const Graph& g, const VertexSet& s);

inline bool is_cds(const Graph& g, const VertexSet& s) {
  return is_dominating(g, s) && is_connected_induced(g, s);
}

/// Cut vertices of the subgraph induced by `s`. Requires
/// is_connected_induced(g, s); throws std::invalid_argument otherwise.
VertexSet articulation_vertices_of_induced(const Graph& g, const VertexSet& s);

}  // namespace mwmcds

#endif  // MWMCDS_GRAPH_HPP
