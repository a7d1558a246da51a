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

#include "nrbm/tracking.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

namespace {

constexpr std::array<std::int32_t, 8> kCsiPeriodsSlots{5, 10, 20, 40, 80, 160, 320, 640};
constexpr std::array<std::int32_t, 3> kCsiSymbols{1, 2, 4};
constexpr std::int32_t kCsiSymbolsPerSlot = 4;

template <typename Range, typename T>
bool contains(const Range& r, T v) {
    return std::find(r.begin(), r.end(), v) != r.end();
}

}  // namespace

CsiOption parse_csi_option(std::string_view text) {
    if (text == "1" || text == "opt1") return CsiOption::Opt1;
    if (text == "2" || text == "opt2") return CsiOption::Opt2;
    throw ValidationError("csi_option", fmt::format("unknown CSI-RS option '{}'; expected 1|2", text));
}

std::string_view to_string(CsiOption option) { return option == CsiOption::Opt1 ? "1" : "2"; }

void CsiRsConfig::validate(const SsBurstConfig& burst) const {
    if (!contains(kCsiPeriodsSlots, t_csi_slots)) {
        throw ValidationError("csi_slots", fmt::format("T_CSI,slot must be in {{5,10,20,40,80,160,320,640}}, got {}",
                                                       t_csi_slots));
    }
    if (!contains(kCsiSymbols, n_symb)) {
        throw ValidationError("csi_symbols", fmt::format("N_symb,CSI must be in {{1,2,4}}, got {}", n_symb));
    }
    if (!(rho > 0.0 && rho <= 1.0)) {
        throw ValidationError("rho", fmt::format("ρ ∈ (0,1] violated: {}", rho));
    }
    if (n_csi_rx < 1 || n_csi_rx > 4) {
        throw ValidationError("csi_rx", fmt::format("N_CSI,RX must be in 1..4, got {}", n_csi_rx));
    }
    const double resource_block_hz = 12.0 * burst.numerology.spacing_hz();
    if (rho * burst.bandwidth_hz < resource_block_hz) {
        throw ValidationError("rho", fmt::format("ρB = {} Hz is below one resource block ({} Hz)",
                                                 rho * burst.bandwidth_hz, resource_block_hz));
    }
}

TrackingScenario TrackingScenario::make(std::int32_t n_user, std::int32_t n_csi_rx, std::int32_t gnb_beams) {
    if (n_user < 1) throw ValidationError("n_user", fmt::format("must be >= 1, got {}", n_user));
    if (n_csi_rx < 1) throw ValidationError("csi_rx", fmt::format("must be >= 1, got {}", n_csi_rx));
    if (gnb_beams < 1) throw ValidationError("gnb", fmt::format("gNB beam count must be >= 1, got {}", gnb_beams));
    TrackingScenario s;
    s.n_user = n_user;
    s.gnb_beams = gnb_beams;
    s.measures = std::int64_t{n_user} * n_csi_rx;
    s.z_csi = std::min<std::int64_t>(s.measures, gnb_beams);
    return s;
}

Millis csi_window(const SsBurstConfig& burst) {
    return burst.t_ss - ss_burst_max_duration(burst.numerology);
}

std::int64_t csi_count(const Millis& window, const CsiRsConfig& csi, const Numerology& numerology) {
    if (window < Millis{}) {
        throw std::invalid_argument(fmt::format("negative CSI-RS window {}", window.to_string()));
    }
    const Millis period = csi.period(numerology);
    if (csi.option == CsiOption::Opt1) return floor_div(window, period);
    return window.is_zero() ? 0 : ceil_div(window, period);
}

Millis csi_offset(const Millis& window, const CsiRsConfig& csi, const Numerology& numerology) {
    if (csi.option != CsiOption::Opt2) {
        throw std::invalid_argument("CSI-RS offset is defined only for option 2");
    }
    const std::int64_t n_csi = csi_count(window, csi, numerology);
    if (n_csi < 1) {
        throw std::invalid_argument("no CSI-RS schedulable in window");
    }
    return (window - (n_csi - 1) * csi.period(numerology)) / 2;
}

Millis tracking_delay(const TrackingScenario& scenario, const CsiRsConfig& csi, const SsBurstConfig& burst) {
    if (scenario.z_csi < 1) {
        throw std::invalid_argument("tracking delay needs at least one CSI-RS to transmit");
    }
    const Millis window = csi_window(burst);
    const std::int64_t n = csi_count(window, csi, burst.numerology);
    if (n < 1) {
        throw std::invalid_argument("no CSI-RS schedulable in window");
    }
    const Millis t_csi = csi.period(burst.numerology);
    const std::int64_t z = scenario.z_csi;
    const std::int64_t q = z / n;  // full periods
    const std::int64_t r = z % n;  // CSI-RS in the last, partial period

    // Full periods p = 0..q-1 contribute N*p*T_SS each; the trailing
    // partial period sits q*T_SS after the first burst.
    Millis total = (n * (q * (q - 1) / 2) + r * q) * burst.t_ss;
    if (csi.option == CsiOption::Opt1) {
        // instants i*T_CSI, i = 1..N
        total += (q * (n * (n + 1) / 2) + r * (r + 1) / 2) * t_csi;
    } else {
        // instants O + i*T_CSI, i = 0..N-1
        const Millis offset = (window - (n - 1) * t_csi) / 2;
        total += (q * (n * (n - 1) / 2) + r * (r - 1) / 2) * t_csi;
        total += z * offset;
    }
    return total / z;
}

std::int64_t orthogonal_csi_capacity(const SsBurstConfig& burst, const CsiRsConfig& csi) {
    const std::int64_t slots = floor_div(csi_window(burst), burst.numerology.slot);
    // 1/rho is floored; the epsilon keeps 1/0.1 from landing on 9.
    const auto bands = static_cast<std::int64_t>(std::floor(1.0 / csi.rho + 1e-9));
    return slots * (kCsiSymbolsPerSlot / csi.n_symb) * bands;
}

std::int64_t max_neighbors(std::int64_t capacity, std::int64_t n_csi) {
    if (n_csi < 1) {
        throw std::invalid_argument(fmt::format("neighbor limit needs N_CSI >= 1, got {}", n_csi));
    }
    return std::max<std::int64_t>(0, capacity / n_csi - 1);
}

Millis srs_detection_delay(const Millis& srs_period, std::int32_t srs_miss_count) {
    return srs_period / 2 + (srs_miss_count - 1) * srs_period;
}

Millis rlf_delay(const FrameworkConfig& framework, const SweepPlan& plan, const SsBurstConfig& burst) {
    if (framework.is_standalone()) {
        return burst.t_ss / 2 + ia_delay(plan, burst);
    }
    framework.validate();

    const bool has_srs = framework.srs_period.has_value() && framework.srs_miss_count.has_value();
    RlfDetection mode = framework.rlf_detection;
    if (mode == RlfDetection::Auto) {
        mode = (framework.kind == FrameworkKind::NsaUl || has_srs) ? RlfDetection::GnbSounding
                                                                   : RlfDetection::UeNotified;
    }
    if (mode == RlfDetection::UeNotified) {
        return *framework.lte_latency;
    }
    if (!framework.srs_period) throw ValidationError("srs_period", "required for SRS-based RLF detection");
    if (!framework.srs_miss_count) throw ValidationError("srs_miss", "required for SRS-based RLF detection");
    return srs_detection_delay(*framework.srs_period, *framework.srs_miss_count);
}

}  // namespace nrbm
