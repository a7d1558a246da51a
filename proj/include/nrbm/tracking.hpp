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
#include <string_view>

#include "nrbm/duration.hpp"
#include "nrbm/ia.hpp"
#include "nrbm/numerology.hpp"

namespace nrbm {

/// Opt1: first CSI-RS one period after the burst, floor-many per window.
/// Opt2: centred with an offset, ceil-many per window.
enum class CsiOption { Opt1, Opt2 };

CsiOption parse_csi_option(std::string_view text);
std::string_view to_string(CsiOption option);

struct CsiRsConfig {
    CsiOption option = CsiOption::Opt1;
    std::int32_t t_csi_slots = 5;
    std::int32_t n_symb = 1;
    double rho = 0.072;
    std::int32_t n_csi_rx = 1;

    [[nodiscard]] Millis period(const Numerology& numerology) const { return t_csi_slots * numerology.slot; }
    /// Checks the enumerated sets and that rho*B covers at least one
    /// resource block (12 subcarriers).
    void validate(const SsBurstConfig& burst) const;
};

struct TrackingScenario {
    std::int32_t n_user = 5;
    std::int32_t gnb_beams = 1;   ///< k
    std::int64_t measures = 5;    ///< n = N_user * N_CSI,RX
    std::int64_t z_csi = 1;       ///< min(n, k)

    static TrackingScenario make(std::int32_t n_user, std::int32_t n_csi_rx, std::int32_t gnb_beams);
};

/// Time between the end of the longest possible burst and the next burst.
Millis csi_window(const SsBurstConfig& burst);

/// CSI-RS transmissions that fit between two bursts (N_CSI).
std::int64_t csi_count(const Millis& window, const CsiRsConfig& csi, const Numerology& numerology);

/// O_CSI for Opt2; throws std::invalid_argument for Opt1 or an empty window.
Millis csi_offset(const Millis& window, const CsiRsConfig& csi, const Numerology& numerology);

/// Average time to the first CSI-RS over the Z_CSI required transmissions.
Millis tracking_delay(const TrackingScenario& scenario, const CsiRsConfig& csi, const SsBurstConfig& burst);

/// Orthogonal CSI-RS opportunities between two bursts (N_CSI,perp).
std::int64_t orthogonal_csi_capacity(const SsBurstConfig& burst, const CsiRsConfig& csi);

/// floor(capacity / n_csi) - 1, clamped at zero.
std::int64_t max_neighbors(std::int64_t capacity, std::int64_t n_csi);

/// T_SRS/2 + (N_SRS - 1) * T_SRS.
Millis srs_detection_delay(const Millis& srs_period, std::int32_t srs_miss_count);

/// Radio-link-failure recovery delay per framework.
Millis rlf_delay(const FrameworkConfig& framework, const SweepPlan& plan, const SsBurstConfig& burst);

}  // namespace nrbm
