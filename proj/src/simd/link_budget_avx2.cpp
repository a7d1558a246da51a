/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The nr-beammgr Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Compiled with -mavx2 -mno-fma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <limits>

#include "nrbm/simd/link_budget.hpp"

namespace nrbm::simd::avx2 {

void link_snr_db(const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes, std::span<double> out) {
    const std::size_t n = out.size();
    const std::size_t vec_end = n - n % 4;

    const __m256d los_alpha = _mm256_set1_pd(coeffs.los_alpha);
    const __m256d nlos_alpha = _mm256_set1_pd(coeffs.nlos_alpha);
    const __m256d los_ten_beta = _mm256_set1_pd(coeffs.los_ten_beta);
    const __m256d nlos_ten_beta = _mm256_set1_pd(coeffs.nlos_ten_beta);
    const __m256d budget = _mm256_set1_pd(budget_db);
    const __m256d no_link = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    const __m128i los_code = _mm_set1_epi32(kStateLos);
    const __m128i outage_code = _mm_set1_epi32(kStateOutage);

    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m128i state = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lanes.state.data() + i));
        // widen 32-bit lane masks to 64-bit so they line up with the doubles
        const __m256d is_los = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(_mm_cmpeq_epi32(state, los_code)));
        const __m256d is_out = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(_mm_cmpeq_epi32(state, outage_code)));

        const __m256d alpha = _mm256_blendv_pd(nlos_alpha, los_alpha, is_los);
        const __m256d ten_beta = _mm256_blendv_pd(nlos_ten_beta, los_ten_beta, is_los);

        __m256d pl = _mm256_mul_pd(ten_beta, _mm256_loadu_pd(lanes.log10_distance.data() + i));
        pl = _mm256_add_pd(alpha, pl);
        pl = _mm256_add_pd(pl, _mm256_loadu_pd(lanes.shadow_db.data() + i));
        const __m256d snr = _mm256_sub_pd(budget, pl);
        _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(snr, no_link, is_out));
    }

    if (vec_end < n) {
        const LinkLanes tail{lanes.log10_distance.subspan(vec_end), lanes.shadow_db.subspan(vec_end),
                             lanes.state.subspan(vec_end)};
        scalar::link_snr_db(coeffs, budget_db, tail, out.subspan(vec_end));
    }
}

double max_value(std::span<const double> values) {
    const std::size_t n = values.size();
    const std::size_t vec_end = n - n % 4;
    __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < vec_end; i += 4) {
        best = _mm256_max_pd(best, _mm256_loadu_pd(values.data() + i));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double result = lanes[0];
    for (int k = 1; k < 4; ++k) result = lanes[k] > result ? lanes[k] : result;
    for (std::size_t i = vec_end; i < n; ++i) result = values[i] > result ? values[i] : result;
    return result;
}

}  // namespace nrbm::simd::avx2
