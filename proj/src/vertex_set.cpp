// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "mwmcds/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwmcds {

VertexSet VertexSet::from_members(std::size_t n, std::span<const VertexId> members) {
  VertexSet s(n);
  for (const VertexId v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(n == 0 ? 0 : n - 1));
    }
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  std::fill_n(s.flags_.begin(), n, std::uint8_t{1});
  s.size_ = n;
  return s;
}

bool VertexSet::insert(VertexId v) noexcept {
  auto& flag = flags_[static_cast<std::size_t>(v)];
  if (flag != 0) return false;
  flag = 1;
  ++size_;
  return true;
}

bool VertexSet::erase(VertexId v) noexcept {
  auto& flag = flags_[static_cast<std::size_t>(v)];
  if (flag == 0) return false;
  flag = 0;
  --size_;
  return true;
}

void VertexSet::clear() noexcept {
  std::fill(flags_.begin(), flags_.end(), std::uint8_t{0});
  size_ = 0;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (flags_[i] != 0) out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

}  // namespace mwmcds
