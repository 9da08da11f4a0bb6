// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_CONSTRUCTOR_HPP
#define MWMCDS_CONSTRUCTOR_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mwmcds/graph.hpp"
#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

/// The single random engine type used throughout the solver.
using Rng = std::mt19937_64;

enum class Color : std::uint8_t { White, Gray, Black };

/// WHITE/GRAY/BLACK coloring used while growing a connected dominating set.
///
/// BLACK vertices form the set. GRAY vertices are dominated non-members and
/// are the promotion candidates. white_degree(v) is the number of WHITE
/// neighbors of v and is maintained under every recoloring.
class ColorState {
 public:
  /// Everything WHITE, empty set.
  explicit ColorState(const Graph& g);

  /// Colors derived from a dominating set: members BLACK, everything else
  /// GRAY. No WHITE vertex remains.
  static ColorState from_dominating_set(const Graph& g, const VertexSet& s);

  Color color(VertexId v) const noexcept { return colors_[static_cast<std::size_t>(v)]; }
  std::uint32_t white_degree(VertexId v) const noexcept {
    return white_degree_[static_cast<std::size_t>(v)];
  }
  const VertexSet& members() const noexcept { return members_; }
  std::size_t white_count() const noexcept { return white_count_; }
  bool has_white() const noexcept { return white_count_ != 0; }

  /// GRAY vertices in an order that depends only on the sequence of
  /// recolorings applied so far.
  const std::vector<VertexId>& gray() const noexcept { return gray_; }

  /// WHITE -> GRAY without touching the set (seed step).
  void mark_gray(VertexId v);
  /// GRAY -> WHITE (a member was removed and v lost its last dominator).
  void mark_white(VertexId v);
  /// BLACK -> GRAY or WHITE, taking v out of the set.
  void remove_member(VertexId v, Color new_color);
  /// GRAY -> BLACK; WHITE neighbors become GRAY.
  void promote(VertexId v);

  /// GRAY vertex with the largest white_degree, lowest id on ties.
  /// Requires a nonempty gray list.
  VertexId best_gray() const;

 private:
  void set_color(VertexId v, Color c);

  const Graph* g_;
  std::vector<Color> colors_;
  std::vector<std::uint32_t> white_degree_;
  std::vector<std::size_t> gray_pos_;
  std::vector<VertexId> gray_;
  VertexSet members_;
  std::size_t white_count_ = 0;
};

/// Called after every promotion during construction and repair.
using GrowthObserver = std::function<void(const ColorState&)>;

/// Degree-greedy construction: seed at the highest-degree vertex, then keep
/// promoting the GRAY vertex with the most WHITE neighbors. Deterministic.
VertexSet generate_greedy(const Graph& g, const GrowthObserver& observer = {});

/// Same growth mechanics with a uniform random seed and uniform random
/// promotions among GRAY vertices.
VertexSet generate_random(const Graph& g, Rng& rng, const GrowthObserver& observer = {});

/// One greedy solution followed by sol_size - 1 random ones.
/// Throws std::invalid_argument for sol_size == 0.
std::vector<VertexSet> generate_initial_pool(const Graph& g, std::size_t sol_size, Rng& rng);

/// Repair loops shared with the neighborhood moves: promote until no WHITE
/// vertex remains.
void grow_greedy(ColorState& state, const GrowthObserver& observer = {});
void grow_random(ColorState& state, Rng& rng, const GrowthObserver& observer = {});

/// Uniform index in [0, bound). bound must be positive.
std::size_t uniform_index(Rng& rng, std::size_t bound);

}  // namespace mwmcds

#endif  // MWMCDS_CONSTRUCTOR_HPP
