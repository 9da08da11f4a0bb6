// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_EXACT_HPP
#define MWMCDS_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mwmcds/graph.hpp"
#include "mwmcds/objective.hpp"
#include "mwmcds/vertex_set.hpp"

namespace mwmcds {

inline constexpr std::size_t kDefaultEnumerationCap = 20;
/// Subsets are encoded as 64-bit masks.
inline constexpr std::size_t kMaxEnumerationCap = 62;

class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(std::size_t n, std::size_t cap);
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// Streams every connected dominating set of a small graph exactly once, in
/// increasing cardinality and, within a cardinality, increasing mask order.
/// Uses bitmask closed neighborhoods, independent of the traversal-based
/// predicates in graph.hpp.
class FeasibleEnumerator {
 public:
  explicit FeasibleEnumerator(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

  /// Writes the next feasible set into `out`; false when exhausted.
  bool next(VertexSet& out);

 private:
  bool advance_mask();
  bool feasible(std::uint64_t mask) const;

  std::size_t n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> closed_;  // N[v] including v
  std::vector<std::uint64_t> open_;    // N(v)
  std::size_t cardinality_ = 0;
  std::uint64_t mask_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<VertexSet> enumerate_feasible(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

struct ExactResult {
  VertexSet solution;
  ObjectiveValue objective;
  std::size_t feasible_count = 0;
};

/// Minimum scalarized objective over every CDS. Ties resolved by compare(),
/// then by the lexicographically smallest sorted member list.
ExactResult exact_optimum(const Graph& g, const ScalarWeights& sw,
                          std::size_t cap = kDefaultEnumerationCap);

}  // namespace mwmcds

#endif  // MWMCDS_EXACT_HPP
