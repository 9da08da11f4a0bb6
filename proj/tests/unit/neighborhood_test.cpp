// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mwmcds/neighborhood.hpp"
#include "mwmcds/objective.hpp"

using namespace mwmcds;
using namespace mwmcds::testing;

TEST_CASE("greedy move examples") {
  const auto s4 = star(4);
  CHECK(neighbor_greedy(s4, set_of(s4, {0})).members() == std::vector<VertexId>{0});

  const auto p4 = path4();
  CHECK(neighbor_greedy(p4, set_of(p4, {1, 2})).members() == std::vector<VertexId>{1, 2});

  const auto k3 = triangle();
  const auto before = set_of(k3, {0, 1});
  const auto after = neighbor_greedy(k3, before);
  CHECK(after.members() == std::vector<VertexId>{1});
  CHECK(eval_scalarized(k3, after, ScalarWeights{}).f <
        eval_scalarized(k3, before, ScalarWeights{}).f);
}

TEST_CASE("random move examples") {
  const auto s4 = star(4);
  const auto one = single_vertex();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    REQUIRE(neighbor_random(s4, set_of(s4, {0}), rng).members() == std::vector<VertexId>{0});
    REQUIRE(neighbor_random(one, set_of(one, {0}), rng).members() == std::vector<VertexId>{0});
  }
}

TEST_CASE("removable members exclude cut vertices") {
  const auto p4 = path4();
  CHECK(removable_members(p4, set_of(p4, {0, 1, 2})) == std::vector<VertexId>{0, 2});
  CHECK(removable_members(p4, set_of(p4, {1, 2})) == std::vector<VertexId>{1, 2});
  CHECK(removable_members(p4, set_of(p4, {2})) == std::vector<VertexId>{2});
}

TEST_CASE("recoloring after a removal") {
  const auto p4 = path4();
  // Removing 1 from {1,2}: 1 stays dominated by 2, 0 loses its only dominator.
  const auto st = remove_and_recolor(p4, set_of(p4, {1, 2}), 1);
  CHECK(st.color(1) == Color::Gray);
  CHECK(st.color(0) == Color::White);
  CHECK(st.color(3) == Color::Gray);
  CHECK(st.white_count() == 1);

  // Removing the last member reseeds it as GRAY.
  const auto s4 = star(4);
  const auto empty = remove_and_recolor(s4, set_of(s4, {0}), 0);
  CHECK(empty.members().empty());
  CHECK(empty.color(0) == Color::Gray);
  CHECK(empty.white_count() == 4);
}

TEST_CASE("recoloring matches a from-scratch recount") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 15);
    const auto g = random_connected(gen, n, 0.2);
    const auto s = VertexSet::full(n);
    for (const VertexId v : removable_members(g, s)) {
      const auto st = remove_and_recolor(g, s, v);
      auto rest = s;
      rest.erase(v);
      for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
        if (rest.contains(u)) {
          REQUIRE(st.color(u) == Color::Black);
          continue;
        }
        bool dominated = false;
        for (const VertexId x : g.neighbors(u)) dominated = dominated || rest.contains(x);
        REQUIRE((st.color(u) == Color::Gray) == dominated);
      }
    }
  }
}

TEST_CASE("both moves keep feasibility on random graphs") {
  std::mt19937_64 gen(42);
  Rng rng(43);
  for (int call = 0; call < 1000; ++call) {
    const std::size_t n = 1 + static_cast<std::size_t>(call % 20);
    const auto g = random_connected(gen, n, 0.05 + 0.01 * (call % 30));
    const auto start = generate_random(g, rng);
    const auto a = neighbor_random(g, start, rng);
    REQUIRE(is_cds(g, a));
    const auto b = neighbor_greedy(g, a);
    REQUIRE(is_cds(g, b));
  }
}

TEST_CASE("greedy move is deterministic") {
  std::mt19937_64 gen(44);
  const auto g = random_connected(gen, 25, 0.15);
  const auto s = VertexSet::full(25);
  CHECK(neighbor_greedy(g, s) == neighbor_greedy(g, s));
}

TEST_CASE("single-vertex graph is a fixed point of both moves") {
  const auto one = single_vertex();
  const auto s = set_of(one, {0});
  CHECK(neighbor_greedy(one, s) == s);
  Rng rng(3);
  CHECK(neighbor_random(one, s, rng) == s);
}
