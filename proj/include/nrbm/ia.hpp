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
#include <optional>
#include <string_view>

#include "nrbm/beams.hpp"
#include "nrbm/duration.hpp"
#include "nrbm/numerology.hpp"

namespace nrbm {

enum class FrameworkKind { SaDl, NsaDl, NsaUl };

/// How a radio link failure is noticed in the non-standalone frameworks.
enum class RlfDetection {
    Auto,         ///< SRS-based for NSA-UL; SRS-based for NSA-DL only if SRS is configured.
    UeNotified,   ///< UE reports over the LTE overlay.
    GnbSounding,  ///< gNB declares failure after N_SRS missed sounding signals.
};

FrameworkKind parse_framework(std::string_view text);
std::string_view to_string(FrameworkKind kind);
RlfDetection parse_rlf_detection(std::string_view text);
std::string_view to_string(RlfDetection mode);

struct FrameworkConfig {
    FrameworkKind kind = FrameworkKind::SaDl;
    std::optional<Millis> lte_latency;
    std::optional<Millis> srs_period;
    std::optional<std::int32_t> srs_miss_count;
    RlfDetection rlf_detection = RlfDetection::Auto;

    static FrameworkConfig sa() { return {}; }
    static FrameworkConfig nsa(FrameworkKind kind, Millis lte_latency) {
        return FrameworkConfig{kind, lte_latency, std::nullopt, std::nullopt, RlfDetection::Auto};
    }

    [[nodiscard]] bool is_standalone() const { return kind == FrameworkKind::SaDl; }
    /// Throws ValidationError for missing or out-of-range NSA parameters.
    void validate() const;
};

/// Exhaustive sweep requirement: S_D blocks to visit every direction pair.
struct SweepPlan {
    std::int64_t s_d = 1;
    BeamCodebook gnb_codebook;
    BeamCodebook ue_codebook;
    std::int32_t gnb_kbf = 1;
    std::int32_t ue_kbf = 1;
};

/// S_D = ceil(dirs_gnb / K_gnb) * ceil(dirs_ue / K_ue). In the NSA-UL
/// framework the same count applies with SRS carried in SS-block resources.
SweepPlan sweep_block_count(const Transceiver& gnb, const Transceiver& ue);

/// Time from the start of the first burst until the last of S_D blocks has
/// been received.
Millis ia_delay(const SweepPlan& plan, const SsBurstConfig& burst);

/// Number of RACH occasions the gNB must open to cover its directions,
/// two directions per occasion.
std::int64_t rach_occasions(const Transceiver& gnb);

/// Beam reporting delay T_BR. SA sweeps RACH occasions (T_slot/2 each, at
/// most N_SS per burst); NSA forwards over LTE.
Millis beam_report_delay(const FrameworkConfig& framework, const Transceiver& gnb, const SsBurstConfig& burst);

struct IaLatency {
    Millis sweep;
    Millis report;
    Millis search_wait;  ///< T_SS/2 when requested, else zero.

    [[nodiscard]] Millis total() const { return sweep + report + search_wait; }
};

IaLatency ia_total_latency(const FrameworkConfig& framework, const SweepPlan& plan, const SsBurstConfig& burst,
                           const Transceiver& gnb, bool include_search_wait = false);

}  // namespace nrbm
