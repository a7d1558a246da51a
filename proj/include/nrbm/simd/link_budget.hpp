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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace nrbm::simd {

/// Link state codes as stored in the kernel's state lane.
inline constexpr std::int32_t kStateLos = 0;
inline constexpr std::int32_t kStateNlos = 1;
inline constexpr std::int32_t kStateOutage = 2;

/// Close-in pathloss coefficients per state: PL = alpha + ten_beta*log10(d) + shadow.
struct PathlossCoeffs {
    double los_alpha;
    double los_ten_beta;
    double nlos_alpha;
    double nlos_ten_beta;
};

/// Structure-of-arrays view of the links of one or more trials.
struct LinkLanes {
    std::span<const double> log10_distance;
    std::span<const double> shadow_db;
    std::span<const std::int32_t> state;
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True if this build contains the kernel and the running CPU supports it.
bool isa_available(Isa isa);

/// Widest available ISA, unless overridden with NR_BEAMMGR_ISA=scalar.
Isa active_isa();

/// out[i] = budget_db - PL[i]; outage links yield -infinity.
/// All spans must have the same length.
void link_snr_db(const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes, std::span<double> out);
void link_snr_db(Isa isa, const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes,
                 std::span<double> out);

/// Largest element, -infinity for an empty span.
double max_value(std::span<const double> values);
double max_value(Isa isa, std::span<const double> values);

namespace scalar {
void link_snr_db(const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes, std::span<double> out);
double max_value(std::span<const double> values);
}  // namespace scalar

namespace avx2 {
void link_snr_db(const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes, std::span<double> out);
double max_value(std::span<const double> values);
}  // namespace avx2

}  // namespace nrbm::simd
