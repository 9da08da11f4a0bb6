// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mwmcds/kernels.hpp"
#include "mwmcds/objective.hpp"

namespace mwmcds {

namespace {

constexpr std::size_t kDenseCandidateLimit = 4'000'000;

std::uint64_t edge_key(VertexId u, VertexId v) {
  const auto [a, b] = std::minmax(u, v);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

void GeneratorConfig::validate() const {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  const std::size_t max_m = max_simple_edges(n);
  if (target_m > max_m) {
    throw std::invalid_argument("target_m=" + std::to_string(target_m) +
                                " exceeds the simple-graph maximum " + std::to_string(max_m) +
                                " for n=" + std::to_string(n));
  }
  if (target_m + 1 < n) {
    throw std::invalid_argument("target_m=" + std::to_string(target_m) + " is below n-1=" +
                                std::to_string(n - 1) + " needed for a connected graph");
  }
  if (!(p_t >= 0.0 && p_t <= 1.0) || !(p_d >= 0.0 && p_d <= 1.0)) {
    throw std::invalid_argument("p_t and p_d must lie in [0,1]");
  }
  if (distance_min <= 0 || distance_max < distance_min) {
    throw std::invalid_argument("distance range must satisfy 0 < min <= max");
  }
  if (instants == 0) throw std::invalid_argument("instants must be at least 1");
}

Graph generate_instance(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const auto n = static_cast<VertexId>(cfg.n);

  std::vector<VertexId> order(cfg.n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(cfg.target_m);
  std::unordered_set<std::uint64_t> present;
  // Random recursive tree over a random vertex order keeps the graph connected.
  for (std::size_t i = 1; i < cfg.n; ++i) {
    const VertexId parent = order[uniform_index(rng, i)];
    pairs.emplace_back(order[i], parent);
    present.insert(edge_key(order[i], parent));
  }

  const std::size_t extra = cfg.target_m - pairs.size();
  if (extra > 0) {
    if (max_simple_edges(cfg.n) <= kDenseCandidateLimit) {
      std::vector<std::pair<VertexId, VertexId>> candidates;
      candidates.reserve(max_simple_edges(cfg.n) - pairs.size());
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
          if (!present.contains(edge_key(u, v))) candidates.emplace_back(u, v);
        }
      }
      for (std::size_t i = 0; i < extra; ++i) {
        const std::size_t j = i + uniform_index(rng, candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        pairs.push_back(candidates[i]);
      }
    } else {
      while (pairs.size() < cfg.target_m) {
        const auto u = static_cast<VertexId>(uniform_index(rng, cfg.n));
        const auto v = static_cast<VertexId>(uniform_index(rng, cfg.n));
        if (u == v || !present.insert(edge_key(u, v)).second) continue;
        pairs.emplace_back(u, v);
      }
    }
  }

  std::uniform_int_distribution<std::int64_t> distance(cfg.distance_min, cfg.distance_max);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v, static_cast<double>(distance(rng))});
  return Graph::from_edges(cfg.n, std::move(edges));
}

std::vector<std::string> metadata_comments(const GeneratorConfig& cfg) {
  return {
      "generator: mwmcds",
      "n: " + std::to_string(cfg.n),
      "m: " + std::to_string(cfg.target_m),
      "p_t: " + format_double(cfg.p_t),
      "p_d: " + format_double(cfg.p_d),
      "distance_range: " + std::to_string(cfg.distance_min) + ".." + std::to_string(cfg.distance_max),
      "instants: " + std::to_string(cfg.instants),
      "seed: " + std::to_string(cfg.seed),
  };
}

std::vector<double> transfer_distances(const Graph& g, const VertexSet& s) {
  if (!is_cds(g, s)) throw InfeasibleError("energy requested for a set that is not a CDS");
  const auto& k = kernels::active();
  std::vector<double> out;
  out.reserve(g.vertex_count() - s.size());
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId u = 0; u < n; ++u) {
    if (s.contains(u)) continue;
    const auto row = g.neighbors(u);
    out.push_back(k.min_member_weight(row.data(), g.neighbor_weights(u).data(), row.size(), s.data()));
  }
  return out;
}

double energy_expected(const Graph& g, const VertexSet& s, const GeneratorConfig& cfg) {
  const double rounds = static_cast<double>(cfg.instants) * cfg.p_t;
  double total = 0.0;
  for (const double d : transfer_distances(g, s)) {
    total += rounds * (d * (1.0 - cfg.p_d) + (d / 2.0) * cfg.p_d);
  }
  return total;
}

double energy_simulate(const Graph& g, const VertexSet& s, const GeneratorConfig& cfg, Rng& rng) {
  const auto distances = transfer_distances(g, s);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double total = 0.0;
  for (std::size_t t = 0; t < cfg.instants; ++t) {
    for (const double d : distances) {
      if (!(unit(rng) < cfg.p_t)) continue;
      total += unit(rng) < cfg.p_d ? d / 2.0 : d;
    }
  }
  return total;
}

}  // namespace mwmcds
