// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "bench.hpp"
#include "mwmcds/annealer.hpp"
#include "mwmcds/exact.hpp"
#include "mwmcds/graph.hpp"
#include "mwmcds/instance_gen.hpp"
#include "mwmcds/objective.hpp"
#include "report.hpp"

namespace mwmcds::cli {

namespace {

// Failure carrying the exit status it maps to.
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

struct SolverFlags {
  SAParams params;
  std::string cooling = "literal";
  std::string trace_path;
  bool timing = false;
};

struct OutputFlags {
  std::string format = "text";
  std::string output_path;
};

void add_weight_flags(CLI::App& cmd, SAParams& p) {
  cmd.add_option("--alpha", p.alpha, "Weight of the normalized cardinality term")
      ->envname("MWMCDS_ALPHA")
      ->capture_default_str();
  cmd.add_option("--beta", p.beta, "Weight of the normalized edge-weight term")
      ->envname("MWMCDS_BETA")
      ->capture_default_str();
}

void add_solver_flags(CLI::App& cmd, SolverFlags& f) {
  auto& p = f.params;
  add_weight_flags(cmd, p);
  cmd.add_option("--seed", p.seed, "Random seed")->envname("MWMCDS_SEED")->capture_default_str();
  cmd.add_option("--t0", p.t0, "Initial temperature (> 1)")->envname("MWMCDS_T0")->capture_default_str();
  cmd.add_option("--k", p.k, "Iterations per temperature level")->envname("MWMCDS_K")->capture_default_str();
  cmd.add_option("--gamma", p.gamma, "Cooling coefficient in (0,1)")
      ->envname("MWMCDS_GAMMA")
      ->capture_default_str();
  cmd.add_option("--cooling-multiplier", f.cooling,
                 "literal: T*(1-gamma) per level; gamma: T*gamma per level")
      ->envname("MWMCDS_COOLING_MULTIPLIER")
      ->check(CLI::IsMember({"literal", "gamma"}))
      ->capture_default_str();
  cmd.add_option("--sol-size", p.sol_size, "Initial pool size")
      ->envname("MWMCDS_SOL_SIZE")
      ->capture_default_str();
  cmd.add_option("--max-iters", p.max_iterations, "Iteration budget")
      ->envname("MWMCDS_MAX_ITERS")
      ->capture_default_str();
  cmd.add_option("--time-limit", p.time_limit_seconds, "Wall-clock cap in seconds (0: none)")
      ->envname("MWMCDS_TIME_LIMIT")
      ->capture_default_str();
  cmd.add_option("--trace", f.trace_path, "Write a per-iteration CSV trace to this path")
      ->envname("MWMCDS_TRACE");
  cmd.add_flag("--timing", f.timing, "Include wall time in the record (not reproducible)")
      ->envname("MWMCDS_TIMING");
}

void add_output_flags(CLI::App& cmd, OutputFlags& f) {
  cmd.add_option("--format", f.format, "Output format")
      ->envname("MWMCDS_FORMAT")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}))
      ->capture_default_str();
}

Format format_of(const OutputFlags& f) { return *parse_format(f.format); }

std::string instance_id(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

Graph load_instance(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw CommandError(kExitIo, "cannot open instance file '" + path + "'");
  try {
    return load_graph_file(path);
  } catch (const GraphError& e) {
    throw CommandError(kExitParse, path + ": " + std::string(to_string(e.kind())) + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError(kExitIo, "cannot write '" + path + "'");
  out << content;
  if (!out) throw CommandError(kExitIo, "write to '" + path + "' failed");
}

void add_objective_fields(Record& rec, const ObjectiveValue& v) {
  rec.add("size", static_cast<std::uint64_t>(v.f_c))
      .add("f_w", v.f_w)
      .add("f_w1", v.f_w1)
      .add("f_w2", v.f_w2)
      .add("f_c_norm", v.f_c_norm)
      .add("f_w_norm", v.f_w_norm)
      .add("f", v.f);
}

Record base_record(std::string command, const std::string& path, const Graph& g) {
  Record rec;
  rec.add("command", std::move(command))
      .add("instance", instance_id(path))
      .add("n", static_cast<std::uint64_t>(g.vertex_count()))
      .add("m", static_cast<std::uint64_t>(g.edge_count()));
  return rec;
}

ScalarWeights weights_of(const SAParams& p) {
  try {
    return ScalarWeights(p.alpha, p.beta);
  } catch (const std::invalid_argument& e) {
    throw CommandError(kExitConfig, e.what());
  }
}

int cmd_solve(const std::string& path, SolverFlags& flags, const OutputFlags& out_flags,
              std::ostream& out) {
  flags.params.cooling = *parse_cooling_mode(flags.cooling);
  flags.params.record_trace = !flags.trace_path.empty();
  try {
    flags.params.validate();
  } catch (const std::invalid_argument& e) {
    throw CommandError(kExitConfig, e.what());
  }
  const Graph g = load_instance(path);
  const RunResult result = run(g, flags.params);
  const SAParams& p = flags.params;

  Record rec = base_record("solve", path, g);
  rec.add("exact", false);
  add_objective_fields(rec, result.objective);
  rec.add("alpha", p.alpha)
      .add("beta", p.beta)
      .add("seed", p.seed)
      .add("t0", p.t0)
      .add("k", static_cast<std::uint64_t>(p.k))
      .add("gamma", p.gamma)
      .add("cooling", std::string(to_string(p.cooling)))
      .add("sol_size", static_cast<std::uint64_t>(p.sol_size))
      .add("max_iters", static_cast<std::uint64_t>(p.max_iterations))
      .add("iterations", static_cast<std::uint64_t>(result.iterations_executed))
      .add("best_found_at", static_cast<std::uint64_t>(result.best_found_at))
      .add("stop_reason", std::string(result.stop_reason == StopReason::TimeLimit ? "time-limit"
                                                                                  : "iterations"));
  if (flags.timing) {
    rec.add("wall_time_ms", std::chrono::duration<double, std::milli>(result.wall_time).count());
  }
  rec.add("dominators", result.best_solution.members());
  out << render(rec, format_of(out_flags));

  if (!flags.trace_path.empty()) {
    std::vector<Record> rows;
    rows.reserve(result.trace.size());
    for (const auto& t : result.trace) {
      Record r;
      r.add("iteration", static_cast<std::uint64_t>(t.iteration))
          .add("temperature", t.temperature)
          .add("move", std::string(t.greedy_move ? "greedy" : "random"))
          .add("neighbor_f", t.neighbor_f)
          .add("accepted", t.accepted)
          .add("incumbent_f", t.incumbent_f)
          .add("best_f", t.best_f);
      rows.push_back(std::move(r));
    }
    write_file(flags.trace_path, render(rows, Format::Csv));
  }
  return kExitOk;
}

int cmd_exact(const std::string& path, const SAParams& p, std::size_t cap,
              const OutputFlags& out_flags, std::ostream& out) {
  const ScalarWeights sw = weights_of(p);
  const Graph g = load_instance(path);
  ExactResult result;
  try {
    result = exact_optimum(g, sw, cap);
  } catch (const EnumerationCapError& e) {
    throw CommandError(kExitCap, std::string("refusing exact enumeration: ") + e.what() +
                                     " (raise it with --cap, at most " +
                                     std::to_string(kMaxEnumerationCap) + ")");
  } catch (const std::invalid_argument& e) {
    throw CommandError(kExitConfig, e.what());
  }
  Record rec = base_record("exact", path, g);
  rec.add("exact", true);
  add_objective_fields(rec, result.objective);
  rec.add("alpha", p.alpha)
      .add("beta", p.beta)
      .add("feasible_sets", static_cast<std::uint64_t>(result.feasible_count))
      .add("dominators", result.solution.members());
  out << render(rec, format_of(out_flags));
  return kExitOk;
}

std::vector<VertexId> parse_solution_list(const std::string& text, std::size_t n) {
  std::vector<VertexId> ids;
  std::string token;
  std::istringstream in(text);
  auto flush = [&] {
    if (token.empty()) return;
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw CommandError(kExitConfig, "malformed vertex id '" + token + "' in solution list");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw CommandError(kExitConfig, "vertex " + token + " outside 0.." + std::to_string(n - 1));
    }
    ids.push_back(static_cast<VertexId>(v));
    token.clear();
  };
  for (const char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return ids;
}

int cmd_verify(const std::string& path, const std::string& solution, const SAParams& p,
               const OutputFlags& out_flags, std::ostream& out) {
  const ScalarWeights sw = weights_of(p);
  const Graph g = load_instance(path);
  const VertexSet s = VertexSet::from_members(g.vertex_count(), parse_solution_list(solution, g.vertex_count()));

  const bool dominating = is_dominating(g, s);
  const bool connected = is_connected_induced(g, s);
  std::string reason = "ok";
  if (s.empty()) {
    reason = "empty set";
  } else if (!dominating) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      bool covered = false;
      for (const VertexId u : g.neighbors(v)) covered = covered || s.contains(u);
      if (!covered) {
        reason = "vertex " + std::to_string(v) + " undominated";
        break;
      }
    }
  } else if (!connected) {
    reason = "induced subgraph disconnected";
  }

  Record rec = base_record("verify", path, g);
  rec.add("dominators", s.members())
      .add("feasible", dominating && connected)
      .add("dominating", dominating)
      .add("connected", connected)
      .add("reason", reason);
  if (dominating) {
    add_objective_fields(rec, eval_scalarized(g, s, sw));
    rec.add("alpha", p.alpha).add("beta", p.beta);
  }
  out << render(rec, format_of(out_flags));
  return dominating && connected ? kExitOk : kExitInfeasible;
}

int cmd_generate(GeneratorConfig cfg, bool clamp, const OutputFlags& out_flags, std::ostream& out) {
  if (clamp) cfg.target_m = std::min(cfg.target_m, max_simple_edges(cfg.n));
  Graph g = [&] {
    try {
      return generate_instance(cfg);
    } catch (const std::invalid_argument& e) {
      throw CommandError(kExitConfig, e.what());
    }
  }();
  const std::string text = write_graph(g, metadata_comments(cfg));
  if (out_flags.output_path.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(out_flags.output_path, text);
  Record rec;
  rec.add("command", std::string("generate"))
      .add("instance", instance_id(out_flags.output_path))
      .add("path", out_flags.output_path)
      .add("n", static_cast<std::uint64_t>(g.vertex_count()))
      .add("m", static_cast<std::uint64_t>(g.edge_count()))
      .add("total_weight", g.total_weight())
      .add("seed", cfg.seed);
  out << render(rec, format_of(out_flags));
  return kExitOk;
}

int cmd_bench(const std::string& config_path, std::size_t threads, const OutputFlags& out_flags,
              std::ostream& out) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw CommandError(kExitIo, "cannot open config '" + config_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  BenchConfig cfg;
  try {
    cfg = parse_bench_config(text.str());
  } catch (const ConfigError& e) {
    throw CommandError(kExitConfig, config_path + ": " + e.what());
  }
  if (threads != 0) cfg.threads = threads;

  std::vector<Record> rows;
  for (const auto& r : run_bench(cfg)) rows.push_back(to_record(r));
  const std::string table = render(rows, format_of(out_flags));
  if (out_flags.output_path.empty()) {
    out << table;
  } else {
    write_file(out_flags.output_path, table);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-weight minimum connected dominating set solver", "mwmcds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mwmcds 1.0.0");

  std::string instance;

  auto* solve = app.add_subcommand("solve", "Run greedy-seeded simulated annealing on an instance");
  SolverFlags solve_flags;
  solve->add_option("instance", instance, "Instance file")->required();
  OutputFlags solve_out;
  add_solver_flags(*solve, solve_flags);
  add_output_flags(*solve, solve_out);

  auto* exact = app.add_subcommand("exact", "Exact optimum by exhaustive enumeration");
  SAParams exact_params;
  std::size_t cap = kDefaultEnumerationCap;
  exact->add_option("instance", instance, "Instance file")->required();
  add_weight_flags(*exact, exact_params);
  exact->add_option("--cap", cap, "Largest vertex count to enumerate")
      ->envname("MWMCDS_CAP")
      ->capture_default_str();
  OutputFlags exact_out;
  add_output_flags(*exact, exact_out);

  auto* verify = app.add_subcommand("verify", "Check a vertex list and report its objectives");
  SAParams verify_params;
  std::string solution;
  verify->add_option("instance", instance, "Instance file")->required();
  verify->add_option("solution", solution, "Comma-separated 0-based vertex ids")->required();
  add_weight_flags(*verify, verify_params);
  OutputFlags verify_out;
  add_output_flags(*verify, verify_out);

  auto* generate = app.add_subcommand("generate", "Generate a data-transfer benchmark instance");
  GeneratorConfig gen;
  bool clamp = false;
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--m", gen.target_m, "Edge count")->required();
  generate->add_option("--p-t", gen.p_t, "Transfer probability per instant")->capture_default_str();
  generate->add_option("--p-d", gen.p_d, "Drop probability")->capture_default_str();
  generate->add_option("--distance-min", gen.distance_min, "Smallest edge distance")
      ->capture_default_str();
  generate->add_option("--distance-max", gen.distance_max, "Largest edge distance")
      ->capture_default_str();
  generate->add_option("--instants", gen.instants, "Transfer rounds")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->envname("MWMCDS_SEED")->capture_default_str();
  generate->add_flag("--clamp", clamp, "Clamp --m to the simple-graph maximum");
  OutputFlags generate_out;
  generate->add_option("-o,--output", generate_out.output_path, "Write the instance here instead of stdout");
  add_output_flags(*generate, generate_out);

  auto* bench = app.add_subcommand("bench", "Generate instances and compare GSA with the greedy baseline");
  std::string config_path;
  std::size_t threads = 0;
  bench->add_option("config", config_path, "JSON benchmark configuration")->required();
  bench->add_option("--threads", threads, "Worker threads (0: config value or all cores)")
      ->envname("MWMCDS_THREADS");
  OutputFlags bench_out;
  bench_out.format = "csv";
  bench->add_option("-o,--output", bench_out.output_path, "Write the table here instead of stdout");
  add_output_flags(*bench, bench_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(instance, solve_flags, solve_out, out);
    if (exact->parsed()) return cmd_exact(instance, exact_params, cap, exact_out, out);
    if (verify->parsed()) return cmd_verify(instance, solution, verify_params, verify_out, out);
    if (generate->parsed()) return cmd_generate(gen, clamp, generate_out, out);
    if (bench->parsed()) return cmd_bench(config_path, threads, bench_out, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitConfig;
}

}  // namespace mwmcds::cli
