// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_NEIGHBORHOOD_HPP
#define MWMCDS_NEIGHBORHOOD_HPP

#include <vector>

#include "mwmcds/constructor.hpp"
#include "mwmcds/graph.hpp"
#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

/// Members of `s` that may be dropped without disconnecting the rest: every
/// member when |s| <= 2, otherwise the non-cut vertices of the induced
/// subgraph. Increasing id order. `s` must be a CDS.
std::vector<VertexId> removable_members(const Graph& g, const VertexSet& s);

/// Removes `v` from a CDS and recolors: v becomes GRAY if it still has a
/// member neighbor (or if the set became empty, so that it can act as the
/// seed), WHITE otherwise; GRAY neighbors of v that lost their last dominator
/// become WHITE. Exposed for instrumented tests.
ColorState remove_and_recolor(const Graph& g, const VertexSet& s, VertexId v);

/// Drop the removable member of smallest degree (lowest id on ties), then
/// greedily repair. Returns a copy of `s` if nothing is removable.
VertexSet neighbor_greedy(const Graph& g, const VertexSet& s);

/// Drop a uniformly random removable member, then repair by uniform random
/// promotions.
VertexSet neighbor_random(const Graph& g, const VertexSet& s, Rng& rng);

}  // namespace mwmcds

#endif  // MWMCDS_NEIGHBORHOOD_HPP
