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

#include "nrbm/beams.hpp"
#include "nrbm/ia.hpp"
#include "nrbm/numerology.hpp"
#include "nrbm/tracking.hpp"

namespace nrbm {

struct SsOverhead {
    double r_ss = 0.0;      ///< SS-block resource area, Hz*ms
    double omega_5ms = 0.0;
    double omega_tss = 0.0;
};

/// Fractions of the time-frequency grid spent on control signalling.
struct OverheadReport {
    double r_ss = 0.0;
    double omega_5ms = 0.0;
    double omega_tss = 0.0;
    double omega_csi = 0.0;
    double omega_tot = 0.0;
    double omega_br = 0.0;
};

/// Exact SS-block resource area N_SS * 4 T_symb * 240 N_rep * Δf in Hz*ms.
Millis::rep ss_resource_area(const SsBurstConfig& burst);

SsOverhead ss_overhead(const SsBurstConfig& burst);

/// CSI-RS share of the window between bursts. n_csi = 0 gives 0.
double csi_overhead(const SsBurstConfig& burst, const CsiRsConfig& csi, std::int64_t n_csi);

/// SS bursts plus CSI-RS over one burst period.
double total_overhead(const SsBurstConfig& burst, const CsiRsConfig& csi, std::int64_t n_csi);

/// Bandwidth reserved for RACH at the given RACH subcarrier spacing
/// (60 kHz -> 10 MHz, 120 kHz -> 20 MHz).
double rach_bandwidth_hz(std::int32_t rach_spacing_khz);

/// RACH resources for beam reporting over one burst period. SA needs one
/// occasion per pair of gNB directions; NSA needs a single occasion.
double report_overhead(const FrameworkConfig& framework, const Transceiver& gnb, const SsBurstConfig& burst,
                       std::int32_t rach_spacing_khz);

OverheadReport overhead_report(const FrameworkConfig& framework, const Transceiver& gnb, const SsBurstConfig& burst,
                               const CsiRsConfig& csi, std::int64_t n_csi, std::int32_t rach_spacing_khz);

}  // namespace nrbm
