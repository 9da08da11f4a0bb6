// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_OBJECTIVE_HPP
#define MWMCDS_OBJECTIVE_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>

#include "mwmcds/graph.hpp"
#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

/// Raised when an objective is requested for a set that is not feasible.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightParts {
  double f_w1 = 0.0;  // edges with both endpoints in the set
  double f_w2 = 0.0;  // cheapest dominator edge of every outside vertex
  double f_w = 0.0;
};

struct ObjectiveValue {
  std::size_t f_c = 0;
  double f_w1 = 0.0;
  double f_w2 = 0.0;
  double f_w = 0.0;
  double f_c_norm = 0.0;
  double f_w_norm = 0.0;
  double f = 0.0;

  friend bool operator==(const ObjectiveValue&, const ObjectiveValue&) = default;
};

/// Weighted-sum coefficients. alpha + beta must equal 1.
class ScalarWeights {
 public:
  ScalarWeights() = default;
  /// Throws std::invalid_argument unless both lie in [0,1] and sum to 1
  /// (within 1e-9).
  ScalarWeights(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_ = 0.5;
  double beta_ = 0.5;
};

inline std::size_t eval_cardinality(const VertexSet& s) noexcept { return s.size(); }

/// Throws InfeasibleError if some vertex outside `s` has no neighbor in `s`.
WeightParts eval_weight(const Graph& g, const VertexSet& s);

/// Normalized weight: f_w divided by the sum of all edge weights. Defined as 0
/// on an edgeless graph (only reachable when s = V on a single vertex).
double normalize_weight(const Graph& g, double f_w);

ObjectiveValue eval_scalarized(const Graph& g, const VertexSet& s, const ScalarWeights& sw);

/// Total order: scalarized f, then smaller f_c, then smaller f_w.
std::weak_ordering compare(const ObjectiveValue& a, const ObjectiveValue& b) noexcept;

}  // namespace mwmcds

#endif  // MWMCDS_OBJECTIVE_HPP
