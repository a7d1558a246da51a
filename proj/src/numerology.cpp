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

#include "nrbm/numerology.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

namespace {

constexpr std::array<std::int32_t, 4> kBurstSizes{8, 16, 32, 64};
constexpr std::array<std::int64_t, 6> kBurstPeriods{5, 10, 20, 40, 80, 160};

template <typename Range, typename T>
bool contains(const Range& r, T v) {
    return std::find(r.begin(), r.end(), v) != r.end();
}

}  // namespace

Numerology numerology_from_spacing(std::int32_t spacing_khz) {
    for (std::int32_t n = 0; n <= 4; ++n) {
        if (spacing_khz == 15 * (1 << n)) {
            const std::int64_t scale = std::int64_t{1} << n;
            return Numerology{spacing_khz, n, Millis::ratio(1, scale), Millis::ratio(7135, 100000 * scale)};
        }
    }
    throw ValidationError("scs", fmt::format("unsupported subcarrier spacing {} kHz; must be one of "
                                             "{{15, 30, 60, 120, 240}}", spacing_khz));
}

bool is_beam_management_spacing(std::int32_t spacing_khz) {
    return spacing_khz == 120 || spacing_khz == 240;
}

std::int32_t repetitions_for(std::int32_t spacing_khz, bool freq_diversity) {
    if (!freq_diversity) return 1;
    switch (spacing_khz) {
        case 120: return 11;
        case 240: return 5;
        default:
            throw ValidationError("scs", fmt::format("frequency diversity defined only for 120/240 kHz, got {}",
                                                     spacing_khz));
    }
}

SsBurstConfig SsBurstConfig::make(std::int32_t n_ss, std::int64_t t_ss_ms, std::int32_t spacing_khz,
                                  bool freq_diversity, double bandwidth_hz) {
    SsBurstConfig cfg;
    cfg.n_ss = n_ss;
    cfg.t_ss = Millis::whole(t_ss_ms);
    cfg.numerology = numerology_from_spacing(spacing_khz);
    cfg.freq_diversity = freq_diversity;
    cfg.n_rep = repetitions_for(spacing_khz, freq_diversity);
    cfg.bandwidth_hz = bandwidth_hz;
    cfg.validate();
    return cfg;
}

void SsBurstConfig::validate() const {
    if (!contains(kBurstSizes, n_ss)) {
        throw ValidationError("nss", fmt::format("N_SS must be in {{8,16,32,64}}, got {}", n_ss));
    }
    const bool period_ok = t_ss.value().denominator() == 1 && contains(kBurstPeriods, t_ss.value().numerator());
    if (!period_ok) {
        throw ValidationError("tss", fmt::format("T_SS must be in {{5,10,20,40,80,160}}, got {}", t_ss.to_string()));
    }
    if (!is_beam_management_spacing(numerology.spacing_khz)) {
        throw ValidationError("scs", fmt::format("beam management requires 120 or 240 kHz, got {}",
                                                 numerology.spacing_khz));
    }
    if (n_rep != repetitions_for(numerology.spacing_khz, freq_diversity)) {
        throw ValidationError("n_rep", fmt::format("N_rep {} inconsistent with diversity={} at {} kHz", n_rep,
                                                   freq_diversity, numerology.spacing_khz));
    }
    if (!(bandwidth_hz >= kSsBlockSubcarriers * numerology.spacing_hz())) {
        throw ValidationError("bandwidth_mhz", fmt::format("bandwidth {} Hz narrower than one SS block ({} Hz)",
                                                           bandwidth_hz, kSsBlockSubcarriers * numerology.spacing_hz()));
    }
}

Millis ss_burst_max_duration(const Numerology& numerology) {
    switch (numerology.spacing_khz) {
        case 120: return Millis::whole(5);
        case 240: return Millis::ratio(5, 2);
        default:
            throw ValidationError("scs", fmt::format("burst duration defined only for 120/240 kHz, got {}",
                                                     numerology.spacing_khz));
    }
}

Millis burst_tail_time(std::int64_t n_blocks_left, const Numerology& numerology) {
    if (n_blocks_left < 1) {
        throw std::invalid_argument(fmt::format("burst tail needs at least one block, got {}", n_blocks_left));
    }
    const std::int64_t full_slots = n_blocks_left / 2;
    if (n_blocks_left % 2 == 0) {
        return full_slots * numerology.slot - 2 * numerology.symbol;
    }
    return full_slots * numerology.slot + 6 * numerology.symbol;
}

}  // namespace nrbm
