// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mwmcds {

EnumerationCapError::EnumerationCapError(std::size_t n, std::size_t cap)
    : std::runtime_error("instance has " + std::to_string(n) +
                         " vertices, above the enumeration cap of " + std::to_string(cap)),
      n_(n),
      cap_(cap) {}

FeasibleEnumerator::FeasibleEnumerator(const Graph& g, std::size_t cap) : n_(g.vertex_count()) {
  if (cap > kMaxEnumerationCap) {
    throw std::invalid_argument("enumeration cap cannot exceed " + std::to_string(kMaxEnumerationCap));
  }
  if (n_ > cap) throw EnumerationCapError(n_, cap);
  full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  closed_.assign(n_, 0);
  open_.assign(n_, 0);
  for (std::size_t v = 0; v < n_; ++v) closed_[v] = std::uint64_t{1} << v;
  for (const auto& e : g.edges()) {
    const auto bu = std::uint64_t{1} << e.u;
    const auto bv = std::uint64_t{1} << e.v;
    open_[static_cast<std::size_t>(e.u)] |= bv;
    open_[static_cast<std::size_t>(e.v)] |= bu;
    closed_[static_cast<std::size_t>(e.u)] |= bv;
    closed_[static_cast<std::size_t>(e.v)] |= bu;
  }
}

bool FeasibleEnumerator::advance_mask() {
  if (!started_) {
    started_ = true;
    cardinality_ = 1;
    mask_ = 1;
    return true;
  }
  // Next combination of the same popcount (Gosper), else the next cardinality.
  const std::uint64_t t = mask_ | (mask_ - 1);
  const std::uint64_t next =
      (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(mask_) + 1));
  if (t + 1 != 0 && (next & ~full_) == 0) {
    mask_ = next;
    return true;
  }
  if (++cardinality_ > n_) return false;
  mask_ = (std::uint64_t{1} << cardinality_) - 1;
  return true;
}

bool FeasibleEnumerator::feasible(std::uint64_t mask) const {
  std::uint64_t covered = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    covered |= closed_[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  if (covered != full_) return false;

  std::uint64_t reached = mask & (~mask + 1);
  for (std::uint64_t prev = 0; prev != reached;) {
    prev = reached;
    for (std::uint64_t rest = prev; rest != 0; rest &= rest - 1) {
      reached |= open_[static_cast<std::size_t>(std::countr_zero(rest))] & mask;
    }
  }
  return reached == mask;
}

bool FeasibleEnumerator::next(VertexSet& out) {
  if (exhausted_) return false;
  while (advance_mask()) {
    if (!feasible(mask_)) continue;
    out = VertexSet(n_);
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
      out.insert(static_cast<VertexId>(std::countr_zero(rest)));
    }
    return true;
  }
  exhausted_ = true;
  return false;
}

std::vector<VertexSet> enumerate_feasible(const Graph& g, std::size_t cap) {
  FeasibleEnumerator it(g, cap);
  std::vector<VertexSet> out;
  VertexSet s;
  while (it.next(s)) out.push_back(s);
  return out;
}

ExactResult exact_optimum(const Graph& g, const ScalarWeights& sw, std::size_t cap) {
  FeasibleEnumerator it(g, cap);
  ExactResult best;
  std::vector<VertexId> best_members;
  VertexSet s;
  while (it.next(s)) {
    ++best.feasible_count;
    const ObjectiveValue value = eval_scalarized(g, s, sw);
    if (best.feasible_count > 1) {
      const auto order = compare(value, best.objective);
      if (order > 0) continue;
      if (order == 0) {
        auto members = s.members();
        if (!std::lexicographical_compare(members.begin(), members.end(), best_members.begin(),
                                          best_members.end())) {
          continue;
        }
      }
    }
    best.solution = s;
    best.objective = value;
    best_members = s.members();
  }
  return best;
}

}  // namespace mwmcds
