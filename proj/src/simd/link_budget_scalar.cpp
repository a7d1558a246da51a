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

#include <limits>

#include "nrbm/simd/link_budget.hpp"

namespace nrbm::simd::scalar {

void link_snr_db(const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes, std::span<double> out) {
    constexpr double kNoLink = -std::numeric_limits<double>::infinity();
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t state = lanes.state[i];
        const double alpha = state == kStateLos ? coeffs.los_alpha : coeffs.nlos_alpha;
        const double ten_beta = state == kStateLos ? coeffs.los_ten_beta : coeffs.nlos_ten_beta;
        // Operation order is shared with the vector kernels.
        double pl = ten_beta * lanes.log10_distance[i];
        pl = alpha + pl;
        pl = pl + lanes.shadow_db[i];
        out[i] = state == kStateOutage ? kNoLink : budget_db - pl;
    }
}

double max_value(std::span<const double> values) {
    double best = -std::numeric_limits<double>::infinity();
    for (const double v : values) best = v > best ? v : best;
    return best;
}

}  // namespace nrbm::simd::scalar
