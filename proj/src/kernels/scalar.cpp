// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include <limits>

#include "kernel_variants.hpp"

namespace mwmcds::kernels::detail {

double min_member_weight_scalar(const VertexId* ids, const double* weights, std::size_t len,
                                const std::uint8_t* member_flags) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < len; ++i) {
    if (member_flags[ids[i]] != 0 && weights[i] < best) best = weights[i];
  }
  return best;
}

std::size_t count_members_scalar(const VertexId* ids, std::size_t len,
                                 const std::uint8_t* member_flags) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) count += member_flags[ids[i]] != 0 ? 1 : 0;
  return count;
}

}  // namespace mwmcds::kernels::detail
