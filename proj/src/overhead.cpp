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

#include "nrbm/overhead.hpp"

#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

Millis::rep ss_resource_area(const SsBurstConfig& burst) {
    const std::int64_t spacing_hz = std::int64_t{burst.numerology.spacing_khz} * 1000;
    return (std::int64_t{burst.n_ss} * kSsBlockSymbols * burst.numerology.symbol).value() *
           (std::int64_t{kSsBlockSubcarriers} * burst.n_rep * spacing_hz);
}

SsOverhead ss_overhead(const SsBurstConfig& burst) {
    SsOverhead out;
    out.r_ss = boost::rational_cast<double>(ss_resource_area(burst));
    out.omega_5ms = out.r_ss / (5.0 * burst.bandwidth_hz);
    out.omega_tss = out.r_ss / (burst.t_ss.to_double() * burst.bandwidth_hz);
    return out;
}

namespace {

// N_CSI * N_symb,CSI * T_symb in ms.
double csi_airtime(const SsBurstConfig& burst, const CsiRsConfig& csi, std::int64_t n_csi) {
    return (n_csi * csi.n_symb * burst.numerology.symbol).to_double();
}

}  // namespace

double csi_overhead(const SsBurstConfig& burst, const CsiRsConfig& csi, std::int64_t n_csi) {
    if (n_csi == 0) return 0.0;
    const Millis window = csi_window(burst);
    if (window.is_zero()) {
        throw std::invalid_argument("CSI-RS overhead undefined for a zero-length window");
    }
    return csi_airtime(burst, csi, n_csi) * csi.rho / window.to_double();
}

double total_overhead(const SsBurstConfig& burst, const CsiRsConfig& csi, std::int64_t n_csi) {
    const double r_ss = boost::rational_cast<double>(ss_resource_area(burst));
    const double csi_area = csi_airtime(burst, csi, n_csi) * csi.rho * burst.bandwidth_hz;
    return (csi_area + r_ss) / (burst.t_ss.to_double() * burst.bandwidth_hz);
}

double rach_bandwidth_hz(std::int32_t rach_spacing_khz) {
    switch (rach_spacing_khz) {
        case 60: return 10e6;
        case 120: return 20e6;
        default:
            throw ValidationError("rach_scs", fmt::format("RACH spacing must be 60 or 120 kHz, got {}",
                                                          rach_spacing_khz));
    }
}

double report_overhead(const FrameworkConfig& framework, const Transceiver& gnb, const SsBurstConfig& burst,
                       std::int32_t rach_spacing_khz) {
    const double bandwidth = rach_bandwidth_hz(rach_spacing_khz);
    const Numerology rach = numerology_from_spacing(rach_spacing_khz);
    const std::int64_t occasions = framework.is_standalone() ? rach_occasions(gnb) : 1;
    // one occasion = 4 symbols at the RACH numerology
    const double area = (occasions * 4 * rach.symbol).to_double() * bandwidth;
    return area / (burst.t_ss.to_double() * burst.bandwidth_hz);
}

OverheadReport overhead_report(const FrameworkConfig& framework, const Transceiver& gnb, const SsBurstConfig& burst,
                               const CsiRsConfig& csi, std::int64_t n_csi, std::int32_t rach_spacing_khz) {
    const SsOverhead ss = ss_overhead(burst);
    OverheadReport out;
    out.r_ss = ss.r_ss;
    out.omega_5ms = ss.omega_5ms;
    out.omega_tss = ss.omega_tss;
    out.omega_csi = csi_overhead(burst, csi, n_csi);
    out.omega_tot = total_overhead(burst, csi, n_csi);
    out.omega_br = report_overhead(framework, gnb, burst, rach_spacing_khz);
    return out;
}

}  // namespace nrbm
