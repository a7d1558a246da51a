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

#include "nrbm/duration.hpp"

namespace nrbm {

/// Subcarrier spacing and the slot/symbol grid it induces.
/// spacing = 15 * 2^n kHz, slot = 1/2^n ms, symbol = 0.07135/2^n ms.
struct Numerology {
    std::int32_t spacing_khz = 120;
    std::int32_t n = 3;
    Millis slot;
    Millis symbol;

    [[nodiscard]] double spacing_hz() const { return spacing_khz * 1e3; }
    friend bool operator==(const Numerology&, const Numerology&) = default;
};

Numerology numerology_from_spacing(std::int32_t spacing_khz);

/// True for the spacings usable for beam management above 6 GHz.
bool is_beam_management_spacing(std::int32_t spacing_khz);

inline constexpr std::int32_t kMaxSsBlocksPerBurst = 64;
inline constexpr std::int32_t kSsBlockSubcarriers = 240;
inline constexpr std::int32_t kSsBlockSymbols = 4;
inline constexpr double kDefaultBandwidthHz = 400e6;

/// SS burst geometry: how many blocks, how often, and whether the spare
/// bandwidth around each block carries repetitions.
struct SsBurstConfig {
    std::int32_t n_ss = 64;
    Millis t_ss = Millis::whole(20);
    Numerology numerology = numerology_from_spacing(120);
    bool freq_diversity = false;
    std::int32_t n_rep = 1;
    double bandwidth_hz = kDefaultBandwidthHz;

    /// Validated constructor; n_rep is derived from diversity and spacing.
    static SsBurstConfig make(std::int32_t n_ss, std::int64_t t_ss_ms, std::int32_t spacing_khz,
                              bool freq_diversity, double bandwidth_hz = kDefaultBandwidthHz);

    /// Throws ValidationError if any invariant is broken.
    void validate() const;
};

/// Repetition count for the given spacing and diversity setting.
std::int32_t repetitions_for(std::int32_t spacing_khz, bool freq_diversity);

/// Longest span an SS burst can occupy: 5 ms at 120 kHz, 2.5 ms at 240 kHz.
Millis ss_burst_max_duration(const Numerology& numerology);

/// Time from the start of the first slot to the end of the last of
/// `n_blocks_left` SS blocks packed two per slot (symbols 2-5 and 8-11).
Millis burst_tail_time(std::int64_t n_blocks_left, const Numerology& numerology);

}  // namespace nrbm
