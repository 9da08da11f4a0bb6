// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "mwmcds/graph.hpp"
#include "mwmcds/kernels.hpp"
#include "mwmcds/vertex_set.hpp"

using namespace mwmcds;
namespace k = mwmcds::kernels;

namespace {

struct Row {
  std::vector<VertexId> ids;
  std::vector<double> weights;
};

Row random_row(std::mt19937_64& rng, std::size_t len, std::size_t n) {
  Row r;
  std::uniform_int_distribution<VertexId> id(0, static_cast<VertexId>(n - 1));
  std::uniform_real_distribution<double> w(0.01, 50.0);
  for (std::size_t i = 0; i < len; ++i) {
    r.ids.push_back(id(rng));
    r.weights.push_back(w(rng));
  }
  return r;
}

}  // namespace

TEST_CASE("isa names parse back") {
  CHECK(k::parse_isa("scalar") == k::Isa::Scalar);
  CHECK(k::parse_isa("avx2") == k::Isa::Avx2);
  CHECK_FALSE(k::parse_isa("sse9").has_value());
  CHECK(k::to_string(k::Isa::Avx2) == "avx2");
}

TEST_CASE("scalar kernels on small rows") {
  const auto& t = k::scalar_table();
  VertexSet s(6);
  s.insert(2);
  s.insert(5);
  const std::vector<VertexId> ids{0, 2, 4, 5};
  const std::vector<double> w{1.0, 7.0, 0.5, 3.0};
  CHECK(t.count_members(ids.data(), ids.size(), s.data()) == 2);
  CHECK(t.min_member_weight(ids.data(), w.data(), ids.size(), s.data()) == 3.0);
  CHECK(t.count_members(ids.data(), 0, s.data()) == 0);
  CHECK(std::isinf(t.min_member_weight(ids.data(), w.data(), 1, s.data())));
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const auto* avx = k::avx2_table();
  if (avx == nullptr) {
    MESSAGE("avx2 not available on this host; equivalence check skipped");
    return;
  }
  const auto& ref = k::scalar_table();
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 97);
    const std::size_t len = static_cast<std::size_t>(trial % 41);
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (trial % 13 == 0 || coin(rng)) s.insert(static_cast<VertexId>(v));
      if (trial % 17 == 0) s.erase(static_cast<VertexId>(v));
    }
    const auto row = random_row(rng, len, n);
    REQUIRE(avx->count_members(row.ids.data(), len, s.data()) ==
            ref.count_members(row.ids.data(), len, s.data()));
    const double a = avx->min_member_weight(row.ids.data(), row.weights.data(), len, s.data());
    const double b = ref.min_member_weight(row.ids.data(), row.weights.data(), len, s.data());
    REQUIRE(((a == b) || (std::isinf(a) && std::isinf(b))));
  }
}

TEST_CASE("select switches the active table") {
  const auto original = k::active().isa;
  CHECK(k::select(k::Isa::Scalar));
  CHECK(k::active().isa == k::Isa::Scalar);
  if (k::avx2_table() != nullptr) {
    CHECK(k::select(k::Isa::Avx2));
    CHECK(k::active().isa == k::Isa::Avx2);
  } else {
    CHECK_FALSE(k::select(k::Isa::Avx2));
    CHECK(k::active().isa == k::Isa::Scalar);
  }
  k::select(original);
}

TEST_CASE("predicates give the same answers under either table") {
  if (k::avx2_table() == nullptr) return;
  std::mt19937_64 rng(5);
  const auto g = testing::random_connected(rng, 12, 0.3);
  for (unsigned long long mask = 0; mask < (1ULL << 12); mask += 7) {
    const auto s = testing::from_mask(12, mask);
    k::select(k::Isa::Scalar);
    const bool a = is_dominating(g, s);
    k::select(k::Isa::Avx2);
    REQUIRE(is_dominating(g, s) == a);
  }
}
