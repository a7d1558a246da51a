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

#include "nrbm/beams.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

ArrayConfig ArrayConfig::gnb(std::int32_t elements) {
    return ArrayConfig{elements, ArrayRole::GnbSector, 120.0, 60.0};
}

ArrayConfig ArrayConfig::ue(std::int32_t elements) {
    return ArrayConfig{elements, elements == 1 ? ArrayRole::UeOmni : ArrayRole::Ue, 360.0, 60.0};
}

BfKind parse_bf_kind(std::string_view text) {
    if (text == "analog") return BfKind::Analog;
    if (text == "hybrid") return BfKind::Hybrid;
    if (text == "digital") return BfKind::Digital;
    if (text == "omni") return BfKind::Omni;
    throw ValidationError("arch", fmt::format("unknown beamforming architecture '{}'; "
                                              "expected analog|hybrid|digital|omni", text));
}

std::string_view to_string(BfKind kind) {
    switch (kind) {
        case BfKind::Analog: return "analog";
        case BfKind::Hybrid: return "hybrid";
        case BfKind::Digital: return "digital";
        case BfKind::Omni: return "omni";
    }
    return "?";
}

Beamwidth beamwidth_for_elements(std::int32_t elements) {
    if (elements <= 0) {
        throw ValidationError("elements", fmt::format("array needs at least one element, got {}", elements));
    }
    switch (elements) {
        case 4: return {60.0, true};
        case 16: return {26.0, true};
        case 64: return {13.0, true};
        default: break;
    }
    const auto side = static_cast<std::int32_t>(std::lround(std::sqrt(static_cast<double>(elements))));
    if (side * side != elements) {
        throw ValidationError("elements", fmt::format("uncalibrated array size {} is not a perfect square", elements));
    }
    return {120.0 / side, false};
}

namespace {

// ceil(range / width) with a guard against 120/60 = 2.0000000001.
std::int32_t directions_over(double range_deg, double width_deg) {
    const double q = range_deg / width_deg;
    const double r = std::round(q);
    if (std::abs(q - r) < 1e-9) return static_cast<std::int32_t>(r);
    return static_cast<std::int32_t>(std::ceil(q));
}

}  // namespace

BeamCodebook codebook(const ArrayConfig& array) {
    if (array.role == ArrayRole::UeOmni) {
        return BeamCodebook{360.0, 1, 1, 1, 0.0, true};
    }
    const Beamwidth bw = beamwidth_for_elements(array.elements);
    BeamCodebook cb;
    cb.beamwidth_deg = bw.degrees;
    cb.calibrated = bw.calibrated;
    cb.n_azimuth = directions_over(array.azimuth_range_deg, bw.degrees);
    cb.n_elevation = directions_over(array.elevation_range_deg, bw.degrees);
    cb.total_directions = cb.n_azimuth * cb.n_elevation;
    cb.boresight_gain_dbi = 10.0 * std::log10(static_cast<double>(array.elements));
    return cb;
}

std::int32_t simultaneous_beams(const BfArchitecture& arch, std::int32_t elements, std::int32_t total_directions) {
    if (total_directions < 1) {
        throw ValidationError("directions", fmt::format("need at least one direction, got {}", total_directions));
    }
    switch (arch.kind) {
        case BfKind::Analog:
        case BfKind::Omni:
            return 1;
        case BfKind::Digital:
            return std::min(total_directions, elements);
        case BfKind::Hybrid:
            if (arch.hybrid_divisor < 2) {
                throw ValidationError("hybrid_nu", fmt::format("hybrid divisor must be >= 2, got {}",
                                                               arch.hybrid_divisor));
            }
            return std::max(1, std::min(total_directions, elements) / arch.hybrid_divisor);
    }
    return 1;
}

Transceiver Transceiver::make(const ArrayConfig& array, const BfArchitecture& arch) {
    Transceiver t{array, arch, nrbm::codebook(array), 1};
    if (array.role == ArrayRole::UeOmni && arch.kind != BfKind::Omni && arch.kind != BfKind::Analog) {
        throw ValidationError("arch", "an omnidirectional UE has no beamforming architecture");
    }
    t.kbf = simultaneous_beams(arch, array.elements, t.codebook.total_directions);
    return t;
}

}  // namespace nrbm
