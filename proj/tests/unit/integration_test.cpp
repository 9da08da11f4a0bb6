// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end flows across modules: generate, solve, verify against the
// exact optimum, and the energy comparison used by the bench.

#include <doctest.h>

#include "bench.hpp"
#include "fixtures.hpp"
#include "mwmcds/annealer.hpp"
#include "mwmcds/exact.hpp"
#include "mwmcds/instance_gen.hpp"

using namespace mwmcds;

TEST_CASE("generated instance solved by annealing never loses to its greedy seed") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorConfig c;
    c.n = 10 + seed * 3;
    c.target_m = c.n + seed * 4;
    c.seed = seed;
    const auto g = generate_instance(c);
    SAParams p;
    p.seed = seed;
    p.max_iterations = 2000;
    const auto r = run(g, p);
    const auto greedy = generate_greedy(g);
    const auto gv = eval_scalarized(g, greedy, ScalarWeights{});
    CHECK(is_cds(g, r.best_solution));
    CHECK(r.objective.f <= gv.f);
  }
}

TEST_CASE("annealing reaches the exact optimum on small generated instances") {
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratorConfig c;
    c.n = 8;
    c.target_m = 10 + seed % 6;
    c.seed = seed;
    const auto g = generate_instance(c);
    SAParams p;
    p.seed = seed;
    const auto r = run(g, p);
    const auto opt = exact_optimum(g, ScalarWeights{});
    CHECK(r.objective.f >= opt.objective.f);
    hits += r.objective.f == opt.objective.f ? 1 : 0;
  }
  CHECK(hits >= 9);
}

TEST_CASE("small bench keeps GSA at or below the greedy baseline") {
  cli::BenchConfig cfg;
  cfg.seed = 4;
  cfg.replicas = 2;
  cfg.rows = {{12, 20}, {16, 40}};
  cfg.solver.max_iterations = 1000;
  cfg.threads = 1;
  const auto results = cli::run_bench(cfg);
  REQUIRE(results.size() == 4);
  for (const auto& r : results) {
    CHECK(r.gsa.f <= r.greedy.f);
    CHECK(r.m == r.target_m);
    CHECK_FALSE(r.clamped);
  }
}
