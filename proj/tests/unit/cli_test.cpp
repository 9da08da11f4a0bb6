// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "cli.hpp"
#include "report.hpp"

using namespace mwmcds;
using namespace mwmcds::cli;
using nlohmann::json;

namespace {

const std::string kData = MWMCDS_EXAMPLES_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "mwmcds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json-lines");
  const auto r = call(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("mwmcds_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("solve examples") {
  const auto star = call_json({"solve", kData + "/star4.txt"});
  CHECK(star["size"] == 1);
  CHECK(star["dominators"] == json::array({0}));

  const auto p4 = call_json({"solve", kData + "/p4.txt", "--alpha", "0.5", "--beta", "0.5"});
  CHECK(p4["size"] == 2);
  CHECK(p4["f"].get<double>() == 0.75);
}

TEST_CASE("solve output is byte-identical across reruns") {
  const std::vector<std::string> args{"solve", kData + "/p4.txt", "--seed", "17", "--format", "csv"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("wall_time") == std::string::npos);
  const auto timed = call({"solve", kData + "/p4.txt", "--timing"});
  CHECK(timed.out.find("wall_time_ms") != std::string::npos);
}

TEST_CASE("exact examples") {
  CHECK(call_json({"exact", kData + "/star4.txt"})["dominators"] == json::array({0}));
  const auto p4 = call_json({"exact", kData + "/p4.txt"});
  CHECK(p4["dominators"] == json::array({1, 2}));
  CHECK(p4["f"].get<double>() == 0.75);
  CHECK(call_json({"exact", kData + "/k3.txt"})["dominators"] == json::array({0}));
}

TEST_CASE("exact refuses graphs above the cap") {
  const auto r = call({"exact", kData + "/p4.txt", "--cap", "3"});
  CHECK(r.code == kExitCap);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("verify examples") {
  const auto ok = call({"verify", kData + "/p4.txt", "1,2", "--format", "json-lines"});
  CHECK(ok.code == kExitOk);
  const auto rec = json::parse(ok.out);
  CHECK(rec["feasible"] == true);
  CHECK(rec["f_w"].get<double>() == 6.0);

  const auto split = call({"verify", kData + "/p4.txt", "0,3", "--format", "json-lines"});
  CHECK(split.code == kExitInfeasible);
  CHECK(json::parse(split.out)["reason"] == "induced subgraph disconnected");

  const auto partial = call({"verify", kData + "/p4.txt", "1", "--format", "json-lines"});
  CHECK(partial.code == kExitInfeasible);
  const auto prec = json::parse(partial.out);
  CHECK(prec["reason"] == "vertex 3 undominated");
  CHECK_FALSE(prec.contains("f"));
}

TEST_CASE("verify rejects malformed solution lists and reports the empty set") {
  CHECK(call({"verify", kData + "/p4.txt", "1,x"}).code == kExitConfig);
  CHECK(call({"verify", kData + "/p4.txt", "9"}).code == kExitConfig);
  const auto empty = call({"verify", kData + "/p4.txt", "", "--format", "json-lines"});
  CHECK(empty.code == kExitInfeasible);
  CHECK(json::parse(empty.out)["reason"] == "empty set");
}

TEST_CASE("solve and exact records pass verify") {
  for (const std::string file : {"p4.txt", "star4.txt", "k3.txt"}) {
    for (const std::string cmd : {"solve", "exact"}) {
      const auto rec = call_json({cmd, kData + "/" + file});
      std::string list;
      for (const auto& v : rec["dominators"]) {
        if (!list.empty()) list += ",";
        list += std::to_string(v.get<int>());
      }
      const auto back = call_json({"verify", kData + "/" + file, list});
      CHECK(back["feasible"] == true);
      CHECK(back["f"] == rec["f"]);
    }
  }
}

TEST_CASE("error exit codes") {
  CHECK(call({"solve", "/nonexistent/x.txt"}).code == kExitIo);
  const auto bad = temp_file("bad.txt", "3 2\n0 1 1\n");
  CHECK(call({"solve", bad.string()}).code == kExitParse);
  const auto disconnected = temp_file("disc.txt", "4 2\n0 1 1\n2 3 1\n");
  const auto r = call({"solve", disconnected.string()});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("disconnected") != std::string::npos);
  CHECK(call({"solve", kData + "/p4.txt", "--alpha", "0.9"}).code == kExitConfig);
  CHECK(call({"solve", kData + "/p4.txt", "--gamma", "1.5"}).code == kExitConfig);
  CHECK(call({"solve", kData + "/p4.txt", "--format", "yaml"}).code == kExitConfig);
  CHECK(call({"frobnicate"}).code == kExitConfig);
  CHECK(call({}).code == kExitConfig);
  CHECK(call({"generate", "--n", "20", "--m", "224"}).code == kExitConfig);
}

TEST_CASE("generate writes a loadable instance") {
  const auto out = std::filesystem::temp_directory_path() / "mwmcds_cli_test_gen.txt";
  const auto r = call({"generate", "--n", "12", "--m", "20", "--seed", "4", "-o", out.string()});
  REQUIRE(r.code == 0);
  const auto solved = call_json({"solve", out.string()});
  CHECK(solved["n"] == 12);
  CHECK(solved["m"] == 20);
  const auto clamped = call({"generate", "--n", "5", "--m", "50", "--clamp"});
  CHECK(clamped.code == 0);
  CHECK(clamped.out.find("\n5 10\n") != std::string::npos);
}

TEST_CASE("solve writes a trace") {
  const auto path = std::filesystem::temp_directory_path() / "mwmcds_cli_test_trace.csv";
  const auto r = call({"solve", kData + "/p4.txt", "--max-iters", "7", "--trace", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 8);
}

TEST_CASE("bench config parsing") {
  const auto cfg = parse_bench_config(
      R"({"seed": 3, "replicas": 2, "rows": [{"n": 6, "m": 8}], "solver": {"max_iterations": 50}})");
  CHECK(cfg.seed == 3);
  CHECK(cfg.replicas == 2);
  REQUIRE(cfg.rows.size() == 1);
  CHECK(cfg.rows[0].n == 6);
  CHECK(cfg.solver.max_iterations == 50);
  CHECK_THROWS_AS(parse_bench_config(R"({"sead": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config(R"({"rows": [{"n": 6}]})"), ConfigError);
}

TEST_CASE("bench is deterministic and respects clamping") {
  const auto path = temp_file("bench.json",
                              R"({"seed": 5, "replicas": 3, "clamp_to_simple_graph": true,
                                  "rows": [{"n": 6, "m": 40}, {"n": 9, "m": 12}],
                                  "solver": {"max_iterations": 200, "sol_size": 5}})");
  const auto a = call({"bench", path.string(), "--threads", "2"});
  const auto b = call({"bench", path.string(), "--threads", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream rows(a.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(rows, line)) ++count;
  CHECK(count == 1 + 2 * 3);

  const auto strict = temp_file("bench_strict.json",
                                R"({"clamp_to_simple_graph": false, "rows": [{"n": 6, "m": 40}]})");
  CHECK(call({"bench", strict.string()}).code == kExitConfig);
}

TEST_CASE("seed derivation separates roles and replicas") {
  CHECK(derive_seed(1, 20, 0, 0) != derive_seed(1, 20, 0, 1));
  CHECK(derive_seed(1, 20, 0, 0) != derive_seed(1, 20, 1, 0));
  CHECK(derive_seed(1, 20, 0, 0) != derive_seed(2, 20, 0, 0));
  CHECK(derive_seed(1, 20, 0, 0) == derive_seed(1, 20, 0, 0));
}

TEST_CASE("record rendering") {
  Record r;
  r.add("name", std::string("a,b")).add("x", 0.1).add("ok", true).add("ids", std::vector<VertexId>{0, 5});
  CHECK(render(r, Format::Csv) == "name,x,ok,ids\n\"a,b\",0.1,true,\"0,5\"\n");
  CHECK(render(r, Format::Text) == "name: a,b\nx: 0.1\nok: true\nids: 0,5\n");
  const auto j = json::parse(render(r, Format::JsonLines));
  CHECK(j["ids"] == json::array({0, 5}));
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(4.0) == "4");
}
