// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mwmcds/graph.hpp"

namespace mwmcds {

namespace {

struct RawEdge {
  std::int64_t u;
  std::int64_t v;
  double w;
  std::size_t line;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw GraphError(GraphErrorKind::Parse,
                     "line " + std::to_string(line) + ": bad " + what + " '" + std::string(token) + "'",
                     line);
  }
  return value;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

Graph load_graph(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<RawEdge> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw GraphError(GraphErrorKind::Parse, at_line(line_no) + "expected header 'n m'", line_no);
      }
      n = parse_number<std::int64_t>(tokens[0], line_no, "vertex count");
      m = parse_number<std::int64_t>(tokens[1], line_no, "edge count");
      if (n < 0 || m < 0) {
        throw GraphError(GraphErrorKind::Parse, at_line(line_no) + "negative count in header", line_no);
      }
      if (n == 0) throw GraphError(GraphErrorKind::EmptyGraph, "graph has no vertices", line_no);
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) {
      throw GraphError(GraphErrorKind::Parse, at_line(line_no) + "expected edge 'u v w'", line_no);
    }
    if (static_cast<std::int64_t>(raw.size()) == m) {
      throw GraphError(GraphErrorKind::Parse,
                       at_line(line_no) + "more edge lines than the declared " + std::to_string(m),
                       line_no);
    }
    raw.push_back({parse_number<std::int64_t>(tokens[0], line_no, "vertex id"),
                   parse_number<std::int64_t>(tokens[1], line_no, "vertex id"),
                   parse_number<double>(tokens[2], line_no, "weight"), line_no});
  }
  if (!have_header) throw GraphError(GraphErrorKind::Parse, "missing header 'n m'");
  if (static_cast<std::int64_t>(raw.size()) != m) {
    throw GraphError(GraphErrorKind::Parse, "header declares " + std::to_string(m) +
                                                " edges but " + std::to_string(raw.size()) +
                                                " were found");
  }

  bool one_based = !raw.empty();
  for (const auto& e : raw) {
    if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
      one_based = false;
      break;
    }
  }
  const std::int64_t shift = one_based ? 1 : 0;

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  for (const auto& e : raw) {
    const std::int64_t u = e.u - shift;
    const std::int64_t v = e.v - shift;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       at_line(e.line) + "vertex id outside the declared range", e.line);
    }
    if (u == v) {
      throw GraphError(GraphErrorKind::SelfLoop,
                       at_line(e.line) + "self-loop at vertex " + std::to_string(e.u), e.line);
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw GraphError(GraphErrorKind::NonPositiveWeight,
                       at_line(e.line) + "weight must be positive and finite", e.line);
    }
    const auto key = std::minmax(u, v);
    const auto [it, inserted] = seen.emplace(key, e.line);
    if (!inserted) {
      throw GraphError(GraphErrorKind::DuplicateEdge,
                       at_line(e.line) + "duplicate of the edge on line " + std::to_string(it->second),
                       e.line);
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), e.w});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string write_graph(const Graph& g, std::span<const std::string> header_comments) {
  std::string out;
  for (const auto& c : header_comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  char buf[64];
  for (const auto& e : g.edges()) {
    const auto res = std::to_chars(buf, buf + sizeof buf, e.w);
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ';
    out.append(buf, res.ptr);
    out += '\n';
  }
  return out;
}

}  // namespace mwmcds
