// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_VERTEX_SET_HPP
#define MWMCDS_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mwmcds {

using VertexId = std::int32_t;

/// Fixed-length membership vector over the vertices 0..n-1 of a graph.
///
/// The flag buffer carries a few zeroed bytes past the last vertex so that the
/// vector kernels may issue 32-bit gathers at any vertex offset.
class VertexSet {
 public:
  static constexpr std::size_t kGatherPadding = 4;

  VertexSet() : flags_(kGatherPadding, 0) {}
  explicit VertexSet(std::size_t n) : n_(n), flags_(n + kGatherPadding, 0) {}

  static VertexSet from_members(std::size_t n, std::span<const VertexId> members);
  static VertexSet full(std::size_t n);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(VertexId v) const noexcept { return flags_[static_cast<std::size_t>(v)] != 0; }

  /// Returns true if v was not already present.
  bool insert(VertexId v) noexcept;
  /// Returns true if v was present.
  bool erase(VertexId v) noexcept;
  void clear() noexcept;

  /// Members in increasing id order.
  std::vector<VertexId> members() const;

  /// Raw flag bytes (0 or 1), universe() of them followed by zero padding.
  const std::uint8_t* data() const noexcept { return flags_.data(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.n_ == b.n_ && a.flags_ == b.flags_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint8_t> flags_;
};

}  // namespace mwmcds

#endif  // MWMCDS_VERTEX_SET_HPP
