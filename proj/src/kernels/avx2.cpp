// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <limits>

#include "kernel_variants.hpp"

namespace mwmcds::kernels::detail {

namespace {

// Gathers 4 (or 8) 32-bit words at byte offsets ids[i] of the flag buffer and
// keeps the low byte, i.e. the membership flag of each id. Reading up to 3
// bytes past a flag is covered by VertexSet::kGatherPadding.
inline __m128i gather_flags4(const std::uint8_t* flags, const VertexId* ids) {
  const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ids));
  const __m128i words = _mm_i32gather_epi32(reinterpret_cast<const int*>(flags), idx, 1);
  return _mm_and_si128(words, _mm_set1_epi32(0xFF));
}

inline __m256i gather_flags8(const std::uint8_t* flags, const VertexId* ids) {
  const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ids));
  const __m256i words = _mm256_i32gather_epi32(reinterpret_cast<const int*>(flags), idx, 1);
  return _mm256_and_si256(words, _mm256_set1_epi32(0xFF));
}

}  // namespace

double min_member_weight_avx2(const VertexId* ids, const double* weights, std::size_t len,
                              const std::uint8_t* member_flags) {
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  const __m128i zero = _mm_setzero_si128();
  __m256d acc = inf;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m128i flags = gather_flags4(member_flags, ids + i);
    // All-ones lanes for members, sign-extended to 64 bits for the blend.
    const __m128i member32 = _mm_xor_si128(_mm_cmpeq_epi32(flags, zero), _mm_set1_epi32(-1));
    const __m256d member = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(member32));
    const __m256d w = _mm256_blendv_pd(inf, _mm256_loadu_pd(weights + i), member);
    acc = _mm256_min_pd(acc, w);
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d m2 = _mm_min_pd(lo, hi);
  double best = _mm_cvtsd_f64(_mm_min_sd(m2, _mm_unpackhi_pd(m2, m2)));
  for (; i < len; ++i) {
    if (member_flags[ids[i]] != 0 && weights[i] < best) best = weights[i];
  }
  return best;
}

std::size_t count_members_avx2(const VertexId* ids, std::size_t len,
                               const std::uint8_t* member_flags) {
  // Flags are 0 or 1, so lane sums stay exact.
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc = _mm256_add_epi32(acc, gather_flags8(member_flags, ids + i));
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t count = 0;
  for (const auto lane : lanes) count += static_cast<std::size_t>(lane);
  for (; i < len; ++i) count += member_flags[ids[i]] != 0 ? 1 : 0;
  return count;
}

}  // namespace mwmcds::kernels::detail
