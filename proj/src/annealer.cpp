// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/annealer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "mwmcds/neighborhood.hpp"

namespace mwmcds {

std::string_view to_string(CoolingMode mode) noexcept {
  return mode == CoolingMode::Literal ? "literal" : "gamma";
}

std::optional<CoolingMode> parse_cooling_mode(std::string_view name) noexcept {
  if (name == "literal") return CoolingMode::Literal;
  if (name == "gamma") return CoolingMode::Gamma;
  return std::nullopt;
}

void SAParams::validate() const {
  ScalarWeights(alpha, beta);  // throws on bad coefficients
  if (!(t0 > 1.0) || !std::isfinite(t0)) {
    throw std::invalid_argument("t0 must be a finite value greater than 1");
  }
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
  if (sol_size == 0) throw std::invalid_argument("sol_size must be at least 1");
  if (!(greedy_move_threshold >= 0.0 && greedy_move_threshold <= 1.0)) {
    throw std::invalid_argument("greedy move threshold must lie in [0,1]");
  }
  if (!(time_limit_seconds >= 0.0)) throw std::invalid_argument("time limit must be non-negative");
}

double cooling_multiplier(CoolingMode mode, double gamma) {
  const double raw = mode == CoolingMode::Literal ? 1.0 - gamma : gamma;
  return std::round(raw * 1e12) / 1e12;
}

CoolingSchedule::CoolingSchedule(double t0, std::size_t k, double multiplier)
    : t0_(t0), k_(k), multiplier_(multiplier), temperature_(t0) {
  if (!(t0 > 0.0) || k == 0 || !(multiplier > 0.0 && multiplier < 1.0)) {
    throw std::invalid_argument("invalid cooling schedule");
  }
}

double CoolingSchedule::advance() noexcept {
  reheated_ = false;
  if (++level_counter_ == k_) {
    level_counter_ = 0;
    temperature_ *= multiplier_;
    if (temperature_ < 1.0) {
      temperature_ = t0_;
      reheated_ = true;
    }
  }
  return temperature_;
}

bool accept(double temperature, double f_current, double f_neighbor, Rng& rng) {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (f_neighbor < f_current) return true;
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return u < std::exp(-(f_neighbor - f_current) / temperature);
}

std::size_t pick_pool_index(std::size_t pool_size, Rng& rng) {
  if (pool_size == 0) throw std::logic_error("pick from an empty solution pool");
  return uniform_index(rng, pool_size);
}

Annealer::Annealer(const Graph& g, SAParams params)
    : g_(&g),
      params_((params.validate(), params)),
      weights_(params_.alpha, params_.beta),
      rng_(params_.seed),
      schedule_(params_.t0, params_.k, cooling_multiplier(params_.cooling, params_.gamma)),
      started_(std::chrono::steady_clock::now()) {
  auto sets = generate_initial_pool(g, params_.sol_size, rng_);
  pool_.reserve(sets.size());
  for (auto& s : sets) {
    check_feasible(s, "initial pool");
    pool_.push_back(score(std::move(s)));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < pool_.size(); ++i) {
    if (compare(pool_[i].value, pool_[best].value) < 0) best = i;
  }
  best_ = pool_[best];
  current_ = best_;
  if (params_.record_trace) trace_.reserve(params_.max_iterations);
}

Scored Annealer::score(VertexSet s) const {
  ObjectiveValue v = eval_scalarized(*g_, s, weights_);
  return {std::move(s), v};
}

void Annealer::check_feasible(const VertexSet& s, const char* where) const {
  if (params_.validate_moves && !is_cds(*g_, s)) {
    throw std::logic_error(std::string("infeasible solution produced by ") + where);
  }
}

void Annealer::step() {
  ++iteration_;
  const double temperature = schedule_.temperature();
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  const bool greedy = p > params_.greedy_move_threshold;

  VertexSet next;
  if (greedy) {
    next = neighbor_greedy(*g_, current_.set);
  } else {
    current_ = pool_[pick_pool_index(pool_.size(), rng_)];
    next = neighbor_random(*g_, current_.set, rng_);
  }
  check_feasible(next, greedy ? "neighbor_greedy" : "neighbor_random");
  Scored neighbor = score(std::move(next));

  if (compare(neighbor.value, best_.value) < 0) {
    best_ = neighbor;
    best_found_at_ = iteration_;
  }
  const double neighbor_f = neighbor.value.f;
  const bool accepted = accept(temperature, current_.value.f, neighbor_f, rng_);
  if (accepted) current_ = std::move(neighbor);

  if (params_.record_trace) {
    trace_.push_back({iteration_, temperature, greedy, neighbor_f, accepted, current_.value.f,
                      best_.value.f});
  }
  schedule_.advance();

  if (params_.time_limit_seconds > 0.0) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started_;
    timed_out_ = elapsed.count() >= params_.time_limit_seconds;
  }
}

bool Annealer::done() const { return iteration_ >= params_.max_iterations || timed_out_; }

RunResult Annealer::finish() {
  RunResult result;
  if (!is_cds(*g_, best_.set)) throw std::logic_error("best solution is not a connected dominating set");
  result.objective = eval_scalarized(*g_, best_.set, weights_);
  if (!(result.objective == best_.value)) {
    throw std::logic_error("best objective does not recompute to the tracked value");
  }
  result.best_solution = best_.set;
  result.iterations_executed = iteration_;
  result.best_found_at = best_found_at_;
  result.stop_reason = timed_out_ ? StopReason::TimeLimit : StopReason::IterationBudget;
  result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started_);
  result.trace = trace_;
  return result;
}

RunResult run(const Graph& g, const SAParams& params) {
  Annealer annealer(g, params);
  while (!annealer.done()) annealer.step();
  return annealer.finish();
}

}  // namespace mwmcds
