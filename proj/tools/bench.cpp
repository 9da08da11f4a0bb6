// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "mwmcds/constructor.hpp"
#include "mwmcds/objective.hpp"

namespace mwmcds::cli {

namespace {

using json = nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

BenchSide measure(const Graph& g, const VertexSet& s, const ScalarWeights& sw,
                  const GeneratorConfig& gen) {
  const ObjectiveValue v = eval_scalarized(g, s, sw);
  return {v.f_c, v.f_w, v.f, energy_expected(g, s, gen)};
}

}  // namespace

std::vector<BenchRow> benchmark_grid() {
  return {{20, 224},  {30, 474},  {40, 869},  {50, 1325}, {60, 2208},
          {70, 2992}, {80, 3928}, {90, 5002}, {100, 5053}};
}

BenchConfig parse_bench_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(root, {"seed", "replicas", "clamp_to_simple_graph", "rows", "generator", "solver", "threads"},
                 "config");

  BenchConfig cfg;
  read(root, "seed", cfg.seed);
  read(root, "replicas", cfg.replicas);
  read(root, "clamp_to_simple_graph", cfg.clamp_to_simple_graph);
  read(root, "threads", cfg.threads);
  if (cfg.replicas == 0) throw ConfigError("replicas must be at least 1");

  if (root.contains("rows")) {
    const auto& rows = root.at("rows");
    if (!rows.is_array() || rows.empty()) throw ConfigError("rows must be a non-empty array");
    cfg.rows.clear();
    for (const auto& row : rows) {
      if (!row.is_object() || !row.contains("n") || !row.contains("m")) {
        throw ConfigError("each row needs integer fields 'n' and 'm'");
      }
      reject_unknown(row, {"n", "m"}, "row");
      BenchRow r;
      read(row, "n", r.n);
      read(row, "m", r.target_m);
      cfg.rows.push_back(r);
    }
  }

  if (root.contains("generator")) {
    const auto& gen = root.at("generator");
    reject_unknown(gen, {"p_t", "p_d", "distance_min", "distance_max", "instants"}, "generator");
    read(gen, "p_t", cfg.generator.p_t);
    read(gen, "p_d", cfg.generator.p_d);
    read(gen, "distance_min", cfg.generator.distance_min);
    read(gen, "distance_max", cfg.generator.distance_max);
    read(gen, "instants", cfg.generator.instants);
  }

  if (root.contains("solver")) {
    const auto& s = root.at("solver");
    reject_unknown(s, {"alpha", "beta", "t0", "k", "gamma", "cooling", "sol_size", "max_iterations",
                       "greedy_move_threshold"},
                   "solver");
    read(s, "alpha", cfg.solver.alpha);
    read(s, "beta", cfg.solver.beta);
    read(s, "t0", cfg.solver.t0);
    read(s, "k", cfg.solver.k);
    read(s, "gamma", cfg.solver.gamma);
    read(s, "sol_size", cfg.solver.sol_size);
    read(s, "max_iterations", cfg.solver.max_iterations);
    read(s, "greedy_move_threshold", cfg.solver.greedy_move_threshold);
    std::string cooling = std::string(to_string(cfg.solver.cooling));
    read(s, "cooling", cooling);
    const auto mode = parse_cooling_mode(cooling);
    if (!mode) throw ConfigError("cooling must be 'literal' or 'gamma'");
    cfg.solver.cooling = *mode;
  }

  try {
    cfg.solver.validate();
    for (const auto& row : cfg.rows) {
      GeneratorConfig g = cfg.generator;
      g.n = row.n;
      g.target_m = cfg.clamp_to_simple_graph ? std::min(row.target_m, max_simple_edges(row.n))
                                             : row.target_m;
      g.validate();
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::uint64_t derive_seed(std::uint64_t master, std::size_t n, std::size_t replica,
                          std::uint32_t role) noexcept {
  std::uint64_t z = master ^ (static_cast<std::uint64_t>(n) << 32) ^
                    (static_cast<std::uint64_t>(replica) << 2) ^ role;
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<BenchResult> run_bench(const BenchConfig& cfg) {
  const ScalarWeights sw(cfg.solver.alpha, cfg.solver.beta);
  const std::size_t jobs = cfg.rows.size() * cfg.replicas;
  std::vector<BenchResult> results(jobs);

  auto run_job = [&](std::size_t job) {
    const BenchRow& row = cfg.rows[job / cfg.replicas];
    BenchResult& r = results[job];
    r.n = row.n;
    r.target_m = row.target_m;
    r.replica = job % cfg.replicas;
    r.instance_seed = derive_seed(cfg.seed, row.n, r.replica, 0);
    r.solver_seed = derive_seed(cfg.seed, row.n, r.replica, 1);

    GeneratorConfig gen = cfg.generator;
    gen.n = row.n;
    gen.target_m = cfg.clamp_to_simple_graph ? std::min(row.target_m, max_simple_edges(row.n))
                                             : row.target_m;
    gen.seed = r.instance_seed;
    r.clamped = gen.target_m != row.target_m;
    const Graph g = generate_instance(gen);
    r.m = g.edge_count();

    SAParams params = cfg.solver;
    params.seed = r.solver_seed;
    const RunResult run_result = run(g, params);
    r.gsa = measure(g, run_result.best_solution, sw, gen);
    r.best_found_at = run_result.best_found_at;
    r.greedy = measure(g, generate_greedy(g), sw, gen);
  };

  std::size_t workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs);
  if (workers <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) run_job(j);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t j = next++; j < jobs; j = next++) {
        try {
          run_job(j);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

Record to_record(const BenchResult& r) {
  Record rec;
  rec.add("n", static_cast<std::uint64_t>(r.n))
      .add("target_m", static_cast<std::uint64_t>(r.target_m))
      .add("m", static_cast<std::uint64_t>(r.m))
      .add("clamped", r.clamped)
      .add("replica", static_cast<std::uint64_t>(r.replica))
      .add("instance_seed", r.instance_seed)
      .add("solver_seed", r.solver_seed)
      .add("gsa_size", static_cast<std::uint64_t>(r.gsa.size))
      .add("greedy_size", static_cast<std::uint64_t>(r.greedy.size))
      .add("gsa_f_w", r.gsa.f_w)
      .add("greedy_f_w", r.greedy.f_w)
      .add("gsa_f", r.gsa.f)
      .add("greedy_f", r.greedy.f)
      .add("gsa_energy", r.gsa.energy)
      .add("greedy_energy", r.greedy.energy)
      .add("gsa_best_found_at", static_cast<std::uint64_t>(r.best_found_at));
  return rec;
}

}  // namespace mwmcds::cli
