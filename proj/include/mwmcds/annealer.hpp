// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_ANNEALER_HPP
#define MWMCDS_ANNEALER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mwmcds/constructor.hpp"
#include "mwmcds/graph.hpp"
#include "mwmcds/objective.hpp"
#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

/// How gamma turns into the per-level temperature multiplier.
enum class CoolingMode {
  Literal,  // T <- T * (1 - gamma)
  Gamma,    // T <- T * gamma
};

std::string_view to_string(CoolingMode mode) noexcept;
std::optional<CoolingMode> parse_cooling_mode(std::string_view name) noexcept;

struct SAParams {
  double alpha = 0.5;
  double beta = 0.5;
  double t0 = 100.0;
  std::size_t k = 3;
  double gamma = 0.9;
  CoolingMode cooling = CoolingMode::Literal;
  std::size_t sol_size = 50;
  std::size_t max_iterations = 10000;
  /// Wall-clock cap in seconds; 0 disables it. Runs that hit it are not
  /// reproducible.
  double time_limit_seconds = 0.0;
  std::uint64_t seed = 1;
  /// A move is greedy when the uniform draw p exceeds this value.
  double greedy_move_threshold = 0.5;
  bool record_trace = false;
  /// Check is_cds on every pool member and neighbor; throws std::logic_error
  /// on violation.
  bool validate_moves = false;

  /// Throws std::invalid_argument describing the first bad field.
  void validate() const;
};

/// Per-level multiplier for the given mode. The value is rounded to 12
/// decimal places so that decimal inputs such as gamma = 0.9 give exactly the
/// double nearest 0.1 rather than 1 - 0.9.
double cooling_multiplier(CoolingMode mode, double gamma);

/// k iterations per level, geometric decay, reheat to t0 below 1.
class CoolingSchedule {
 public:
  CoolingSchedule(double t0, std::size_t k, double multiplier);

  double temperature() const noexcept { return temperature_; }
  std::size_t level_counter() const noexcept { return level_counter_; }
  bool reheated() const noexcept { return reheated_; }

  /// Called once per iteration. Returns the temperature for the next one.
  double advance() noexcept;

 private:
  double t0_;
  std::size_t k_;
  double multiplier_;
  double temperature_;
  std::size_t level_counter_ = 0;
  bool reheated_ = false;
};

/// Metropolis rule. Strict improvements are accepted without consuming a
/// random draw; otherwise one uniform draw u in [0,1) is taken and the move
/// is accepted when u < exp(-(f_neighbor - f_current) / temperature).
bool accept(double temperature, double f_current, double f_neighbor, Rng& rng);

/// Uniform index into the pool. Throws std::logic_error for an empty pool.
std::size_t pick_pool_index(std::size_t pool_size, Rng& rng);

struct Scored {
  VertexSet set;
  ObjectiveValue value;
};

struct TraceRecord {
  std::size_t iteration = 0;  // 1-based
  double temperature = 0.0;   // temperature in effect during the iteration
  bool greedy_move = false;
  double neighbor_f = 0.0;
  bool accepted = false;
  double incumbent_f = 0.0;  // after the acceptance decision
  double best_f = 0.0;
};

enum class StopReason { IterationBudget, TimeLimit };

struct RunResult {
  VertexSet best_solution;
  ObjectiveValue objective;
  std::size_t iterations_executed = 0;
  /// Iteration at which the best solution was first seen; 0 means it came
  /// from the initial pool.
  std::size_t best_found_at = 0;
  StopReason stop_reason = StopReason::IterationBudget;
  std::chrono::nanoseconds wall_time{0};
  std::vector<TraceRecord> trace;
};

/// Pool-seeded simulated annealing as a step-able state machine.
///
/// Draw order from the single engine seeded with params.seed: the random pool
/// members in order; then per iteration the move draw p, for random moves the
/// pool index and the neighbor's own draws, and finally the acceptance draw
/// when the neighbor is not a strict improvement.
class Annealer {
 public:
  Annealer(const Graph& g, SAParams params);

  /// One iteration of the main loop.
  void step();
  /// Budget exhausted or time limit hit.
  bool done() const;

  /// Recomputes the best solution's objective and checks feasibility.
  RunResult finish();

  const std::vector<Scored>& pool() const noexcept { return pool_; }
  const Scored& current() const noexcept { return current_; }
  const Scored& best() const noexcept { return best_; }
  const CoolingSchedule& schedule() const noexcept { return schedule_; }
  std::size_t iteration() const noexcept { return iteration_; }
  const std::vector<TraceRecord>& trace() const noexcept { return trace_; }

 private:
  Scored score(VertexSet s) const;
  void check_feasible(const VertexSet& s, const char* where) const;

  const Graph* g_;
  SAParams params_;
  ScalarWeights weights_;
  Rng rng_;
  std::vector<Scored> pool_;
  Scored current_;
  Scored best_;
  CoolingSchedule schedule_;
  std::size_t iteration_ = 0;
  std::size_t best_found_at_ = 0;
  std::vector<TraceRecord> trace_;
  std::chrono::steady_clock::time_point started_;
  bool timed_out_ = false;
};

RunResult run(const Graph& g, const SAParams& params);

}  // namespace mwmcds

#endif  // MWMCDS_ANNEALER_HPP
