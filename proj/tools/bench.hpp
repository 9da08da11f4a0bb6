// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_TOOLS_BENCH_HPP
#define MWMCDS_TOOLS_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mwmcds/annealer.hpp"
#include "mwmcds/instance_gen.hpp"
#include "report.hpp"

namespace mwmcds::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t target_m = 0;
};

/// Vertex and edge counts of the published data-transfer comparison.
std::vector<BenchRow> benchmark_grid();

struct BenchConfig {
  std::uint64_t seed = 1;
  std::size_t replicas = 1;
  /// Clamp target_m to n(n-1)/2 instead of rejecting the row.
  bool clamp_to_simple_graph = true;
  std::vector<BenchRow> rows = benchmark_grid();
  /// n, target_m and seed are taken per row.
  GeneratorConfig generator;
  SAParams solver;
  /// 0: one worker per hardware thread.
  std::size_t threads = 0;
};

/// Strict JSON reader: unknown keys and wrong types raise ConfigError.
BenchConfig parse_bench_config(std::string_view json_text);

/// splitmix64 finalizer over (master, n, replica, role). role 0 seeds the
/// instance generator, role 1 the solver.
std::uint64_t derive_seed(std::uint64_t master, std::size_t n, std::size_t replica,
                          std::uint32_t role) noexcept;

struct BenchSide {
  std::size_t size = 0;
  double f_w = 0.0;
  double f = 0.0;
  double energy = 0.0;
};

struct BenchResult {
  std::size_t n = 0;
  std::size_t target_m = 0;
  std::size_t m = 0;
  bool clamped = false;
  std::size_t replica = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t solver_seed = 0;
  BenchSide gsa;
  BenchSide greedy;
  std::size_t best_found_at = 0;
};

/// Runs every (row, replica) pair, possibly on several threads; results come
/// back in row-major order regardless of scheduling.
std::vector<BenchResult> run_bench(const BenchConfig& cfg);

Record to_record(const BenchResult& r);

}  // namespace mwmcds::cli

#endif  // MWMCDS_TOOLS_BENCH_HPP
