// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/neighborhood.hpp"

#include "mwmcds/kernels.hpp"

namespace mwmcds {

namespace {

// Emptying the set of a single-vertex graph leaves nothing WHITE for repair
// to act on, so the removed vertex goes straight back in.
void restore_if_isolated(ColorState& state, VertexId removed) {
  if (state.members().empty() && !state.has_white()) state.promote(removed);
}

}  // namespace

std::vector<VertexId> removable_members(const Graph& g, const VertexSet& s) {
  if (s.size() <= 2) return s.members();
  const VertexSet cut = articulation_vertices_of_induced(g, s);
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (const VertexId v : s.members()) {
    if (!cut.contains(v)) out.push_back(v);
  }
  return out;
}

ColorState remove_and_recolor(const Graph& g, const VertexSet& s, VertexId v) {
  const auto& k = kernels::active();
  ColorState state = ColorState::from_dominating_set(g, s);

  const auto row = g.neighbors(v);
  const bool still_dominated = k.count_members(row.data(), row.size(), s.data()) > 0;
  // An emptied set keeps v GRAY so that repair can restart from it.
  const bool becomes_empty = s.size() == 1;
  state.remove_member(v, still_dominated || becomes_empty ? Color::Gray : Color::White);

  const VertexSet& rest = state.members();
  for (const VertexId p : row) {
    if (state.color(p) != Color::Gray) continue;
    const auto prow = g.neighbors(p);
    if (k.count_members(prow.data(), prow.size(), rest.data()) == 0) state.mark_white(p);
  }
  return state;
}

VertexSet neighbor_greedy(const Graph& g, const VertexSet& s) {
  const auto candidates = removable_members(g, s);
  if (candidates.empty()) return s;
  VertexId pick = candidates.front();
  for (const VertexId v : candidates) {
    if (g.degree(v) < g.degree(pick)) pick = v;
  }
  ColorState state = remove_and_recolor(g, s, pick);
  restore_if_isolated(state, pick);
  grow_greedy(state);
  return state.members();
}

VertexSet neighbor_random(const Graph& g, const VertexSet& s, Rng& rng) {
  const auto candidates = removable_members(g, s);
  if (candidates.empty()) return s;
  const VertexId pick = candidates[uniform_index(rng, candidates.size())];
  ColorState state = remove_and_recolor(g, s, pick);
  restore_if_isolated(state, pick);
  grow_random(state, rng);
  return state.members();
}

}  // namespace mwmcds
