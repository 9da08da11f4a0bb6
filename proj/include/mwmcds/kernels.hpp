// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_KERNELS_HPP
#define MWMCDS_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mwmcds/vertex_set.hpp"

// Inner loops over one adjacency row, masked by set membership.
//
// Every variant must return bit-identical results to the scalar reference:
// min and integer count do not depend on evaluation order, so this holds by
// construction and is checked by the equivalence tests.

namespace mwmcds::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/// Minimum of `weights[i]` over positions whose neighbor `ids[i]` has a
/// nonzero byte in `member_flags`; +infinity when there is none.
/// `member_flags` must stay readable for VertexSet::kGatherPadding bytes past
/// the largest id.
using MinMemberWeightFn = double (*)(const VertexId* ids, const double* weights, std::size_t len,
                                     const std::uint8_t* member_flags);

/// Number of `ids[i]` with a nonzero byte in `member_flags`.
using CountMembersFn = std::size_t (*)(const VertexId* ids, std::size_t len,
                                       const std::uint8_t* member_flags);

struct KernelTable {
  Isa isa;
  MinMemberWeightFn min_member_weight;
  CountMembersFn count_members;
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

/// Best variant supported by this CPU, unless overridden by the MWMCDS_ISA
/// environment variable ("scalar" or "avx2") or by select().
const KernelTable& active() noexcept;

/// Forces a variant; returns false (and changes nothing) if unsupported.
bool select(Isa isa) noexcept;

}  // namespace mwmcds::kernels

#endif  // MWMCDS_KERNELS_HPP
