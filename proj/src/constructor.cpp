// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/constructor.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwmcds {

namespace {
constexpr std::size_t kNotGray = static_cast<std::size_t>(-1);
}

ColorState::ColorState(const Graph& g)
    : g_(&g),
      colors_(g.vertex_count(), Color::White),
      white_degree_(g.vertex_count()),
      gray_pos_(g.vertex_count(), kNotGray),
      members_(g.vertex_count()),
      white_count_(g.vertex_count()) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    white_degree_[v] = static_cast<std::uint32_t>(g.degree(static_cast<VertexId>(v)));
  }
}

ColorState ColorState::from_dominating_set(const Graph& g, const VertexSet& s) {
  ColorState state(g);
  std::fill(state.white_degree_.begin(), state.white_degree_.end(), 0U);
  state.white_count_ = 0;
  state.members_ = s;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    if (s.contains(v)) {
      state.colors_[i] = Color::Black;
    } else {
      state.colors_[i] = Color::Gray;
      state.gray_pos_[i] = state.gray_.size();
      state.gray_.push_back(v);
    }
  }
  return state;
}

void ColorState::set_color(VertexId v, Color c) {
  const auto i = static_cast<std::size_t>(v);
  const Color old = colors_[i];
  if (old == c) return;

  if (old == Color::White) {
    --white_count_;
    for (const VertexId u : g_->neighbors(v)) --white_degree_[static_cast<std::size_t>(u)];
  } else if (c == Color::White) {
    ++white_count_;
    for (const VertexId u : g_->neighbors(v)) ++white_degree_[static_cast<std::size_t>(u)];
  }

  if (old == Color::Gray) {
    const std::size_t pos = gray_pos_[i];
    const VertexId last = gray_.back();
    gray_[pos] = last;
    gray_pos_[static_cast<std::size_t>(last)] = pos;
    gray_.pop_back();
    gray_pos_[i] = kNotGray;
  } else if (c == Color::Gray) {
    gray_pos_[i] = gray_.size();
    gray_.push_back(v);
  }

  if (old == Color::Black) members_.erase(v);
  if (c == Color::Black) members_.insert(v);
  colors_[i] = c;
}

void ColorState::mark_gray(VertexId v) {
  if (color(v) != Color::White) throw std::logic_error("mark_gray: vertex is not WHITE");
  set_color(v, Color::Gray);
}

void ColorState::mark_white(VertexId v) {
  if (color(v) != Color::Gray) throw std::logic_error("mark_white: vertex is not GRAY");
  set_color(v, Color::White);
}

void ColorState::remove_member(VertexId v, Color new_color) {
  if (color(v) != Color::Black || new_color == Color::Black) {
    throw std::logic_error("remove_member: vertex is not BLACK");
  }
  set_color(v, new_color);
}

void ColorState::promote(VertexId v) {
  if (color(v) != Color::Gray) throw std::logic_error("promote: vertex is not GRAY");
  set_color(v, Color::Black);
  for (const VertexId u : g_->neighbors(v)) {
    if (color(u) == Color::White) set_color(u, Color::Gray);
  }
}

VertexId ColorState::best_gray() const {
  if (gray_.empty()) throw std::logic_error("best_gray: no GRAY vertex");
  VertexId best = gray_.front();
  for (const VertexId v : gray_) {
    const auto dv = white_degree(v);
    const auto db = white_degree(best);
    if (dv > db || (dv == db && v < best)) best = v;
  }
  return best;
}

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: empty range");
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

void grow_greedy(ColorState& state, const GrowthObserver& observer) {
  while (state.has_white()) {
    state.promote(state.best_gray());
    if (observer) observer(state);
  }
}

void grow_random(ColorState& state, Rng& rng, const GrowthObserver& observer) {
  while (state.has_white()) {
    const auto& gray = state.gray();
    if (gray.empty()) throw std::logic_error("grow_random: WHITE vertices but no GRAY candidate");
    state.promote(gray[uniform_index(rng, gray.size())]);
    if (observer) observer(state);
  }
}

VertexSet generate_greedy(const Graph& g, const GrowthObserver& observer) {
  ColorState state(g);
  VertexId seed = 0;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(seed)) seed = v;
  }
  state.mark_gray(seed);
  // The seed is the only GRAY vertex, so the first pick is forced.
  state.promote(state.best_gray());
  if (observer) observer(state);
  grow_greedy(state, observer);
  return state.members();
}

VertexSet generate_random(const Graph& g, Rng& rng, const GrowthObserver& observer) {
  ColorState state(g);
  const auto seed = static_cast<VertexId>(uniform_index(rng, g.vertex_count()));
  state.mark_gray(seed);
  state.promote(seed);
  if (observer) observer(state);
  grow_random(state, rng, observer);
  return state.members();
}

std::vector<VertexSet> generate_initial_pool(const Graph& g, std::size_t sol_size, Rng& rng) {
  if (sol_size == 0) throw std::invalid_argument("sol_size must be at least 1");
  std::vector<VertexSet> pool;
  pool.reserve(sol_size);
  pool.push_back(generate_greedy(g));
  for (std::size_t i = 1; i < sol_size; ++i) pool.push_back(generate_random(g, rng));
  return pool;
}

}  // namespace mwmcds
