// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_INSTANCE_GEN_HPP
#define MWMCDS_INSTANCE_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mwmcds/constructor.hpp"
#include "mwmcds/graph.hpp"
#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

/// Data-transfer network model: every vertex transfers at each instant with
/// probability p_t; a transfer is dropped with probability p_d. Edge weights
/// are integer distances.
struct GeneratorConfig {
  std::size_t n = 20;
  std::size_t target_m = 19;
  double p_t = 0.5;
  double p_d = 0.5;
  std::int64_t distance_min = 1;
  std::int64_t distance_max = 100;
  std::size_t instants = 1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument; target_m above n(n-1)/2 or below n-1
  /// is reported together with the admissible range.
  void validate() const;
};

inline std::size_t max_simple_edges(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Random spanning tree, then uniformly random extra edges up to exactly
/// target_m. Weights uniform on [distance_min, distance_max]. Reproducible
/// for a fixed config.
Graph generate_instance(const GeneratorConfig& cfg);

/// Comment lines describing the generator settings, used as the header of
/// written instance files.
std::vector<std::string> metadata_comments(const GeneratorConfig& cfg);

/// Distance from every vertex outside `s` to its cheapest member neighbor,
/// in increasing vertex order. Throws InfeasibleError if `s` is not a CDS.
std::vector<double> transfer_distances(const Graph& g, const VertexSet& s);

/// Expected energy over cfg.instants rounds: each outside vertex u with
/// distance d_u costs p_t * (d_u * (1 - p_d) + d_u / 2 * p_d) per round.
double energy_expected(const Graph& g, const VertexSet& s, const GeneratorConfig& cfg);

/// One Monte Carlo realization of the same model. For every instant and every
/// outside vertex in increasing order: a transfer draw, then a drop draw only
/// if it transferred.
double energy_simulate(const Graph& g, const VertexSet& s, const GeneratorConfig& cfg, Rng& rng);

}  // namespace mwmcds

#endif  // MWMCDS_INSTANCE_GEN_HPP
