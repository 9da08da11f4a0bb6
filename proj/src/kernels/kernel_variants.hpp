// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_SRC_KERNELS_KERNEL_VARIANTS_HPP
#define MWMCDS_SRC_KERNELS_KERNEL_VARIANTS_HPP

#include "mwmcds/kernels.hpp"

namespace mwmcds::kernels::detail {

double min_member_weight_scalar(const VertexId* ids, const double* weights, std::size_t len,
                                const std::uint8_t* member_flags);
std::size_t count_members_scalar(const VertexId* ids, std::size_t len,
                                 const std::uint8_t* member_flags);

#if defined(MWMCDS_HAVE_AVX2)
double min_member_weight_avx2(const VertexId* ids, const double* weights, std::size_t len,
                              const std::uint8_t* member_flags);
std::size_t count_members_avx2(const VertexId* ids, std::size_t len,
                               const std::uint8_t* member_flags);
#endif

}  // namespace mwmcds::kernels::detail

#endif  // MWMCDS_SRC_KERNELS_KERNEL_VARIANTS_HPP
