// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/objective.hpp"

#include <cmath>
#include <string>

#include "mwmcds/kernels.hpp"

namespace mwmcds {

ScalarWeights::ScalarWeights(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("alpha and beta must lie in [0,1]");
  }
  if (std::abs(alpha + beta - 1.0) > 1e-9) {
    throw std::invalid_argument("alpha + beta must equal 1 (got " + std::to_string(alpha + beta) +
                                ")");
  }
}

WeightParts eval_weight(const Graph& g, const VertexSet& s) {
  WeightParts parts;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) parts.f_w1 += e.w;
  }
  const auto& k = kernels::active();
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId u = 0; u < n; ++u) {
    if (s.contains(u)) continue;
    const auto row = g.neighbors(u);
    const double d = k.min_member_weight(row.data(), g.neighbor_weights(u).data(), row.size(), s.data());
    if (std::isinf(d)) {
      throw InfeasibleError("vertex " + std::to_string(u) + " is not dominated");
    }
    parts.f_w2 += d;
  }
  parts.f_w = parts.f_w1 + parts.f_w2;
  return parts;
}

double normalize_weight(const Graph& g, double f_w) {
  const double total = g.total_weight();
  if (total > 0.0) return f_w / total;
  if (f_w > 0.0) throw std::domain_error("positive weight on a graph with zero total weight");
  return 0.0;
}

ObjectiveValue eval_scalarized(const Graph& g, const VertexSet& s, const ScalarWeights& sw) {
  const WeightParts parts = eval_weight(g, s);
  ObjectiveValue out;
  out.f_c = eval_cardinality(s);
  out.f_w1 = parts.f_w1;
  out.f_w2 = parts.f_w2;
  out.f_w = parts.f_w;
  out.f_c_norm = static_cast<double>(out.f_c) / static_cast<double>(g.vertex_count());
  out.f_w_norm = normalize_weight(g, out.f_w);
  out.f = sw.alpha() * out.f_c_norm + sw.beta() * out.f_w_norm;
  return out;
}

std::weak_ordering compare(const ObjectiveValue& a, const ObjectiveValue& b) noexcept {
  if (a.f < b.f) return std::weak_ordering::less;
  if (b.f < a.f) return std::weak_ordering::greater;
  if (a.f_c != b.f_c) return a.f_c < b.f_c ? std::weak_ordering::less : std::weak_ordering::greater;
  if (a.f_w < b.f_w) return std::weak_ordering::less;
  if (b.f_w < a.f_w) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace mwmcds
