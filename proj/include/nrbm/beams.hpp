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

namespace nrbm {

enum class ArrayRole { GnbSector, Ue, UeOmni };

struct ArrayConfig {
    std::int32_t elements = 64;
    ArrayRole role = ArrayRole::GnbSector;
    double azimuth_range_deg = 120.0;
    double elevation_range_deg = 60.0;

    /// gNB sector: 120 deg azimuth, 60 deg elevation.
    static ArrayConfig gnb(std::int32_t elements);
    /// UE array: 360 deg azimuth, 60 deg elevation. A single element is
    /// treated as an omnidirectional receiver.
    static ArrayConfig ue(std::int32_t elements);
};

struct BeamCodebook {
    double beamwidth_deg = 0.0;
    std::int32_t n_azimuth = 1;
    std::int32_t n_elevation = 1;
    std::int32_t total_directions = 1;
    double boresight_gain_dbi = 0.0;
    /// False when the beamwidth came from the 120/sqrt(M) fallback.
    bool calibrated = true;
};

enum class BfKind { Analog, Hybrid, Digital, Omni };

struct BfArchitecture {
    BfKind kind = BfKind::Analog;
    std::int32_t hybrid_divisor = 2;

    static BfArchitecture analog() { return {BfKind::Analog, 2}; }
    static BfArchitecture hybrid(std::int32_t nu = 2) { return {BfKind::Hybrid, nu}; }
    static BfArchitecture digital() { return {BfKind::Digital, 2}; }
    static BfArchitecture omni() { return {BfKind::Omni, 2}; }
};

/// Parses "analog" | "hybrid" | "digital" | "omni".
BfKind parse_bf_kind(std::string_view text);
std::string_view to_string(BfKind kind);

struct Beamwidth {
    double degrees;
    bool calibrated;
};

/// 3 dB beamwidth for an M-element array: the calibrated 60/26/13 degree
/// points for M = 4/16/64, 120/sqrt(M) for other perfect squares.
Beamwidth beamwidth_for_elements(std::int32_t elements);

BeamCodebook codebook(const ArrayConfig& array);

/// Number of beams the transceiver forms at once (K_BF).
std::int32_t simultaneous_beams(const BfArchitecture& arch, std::int32_t elements, std::int32_t total_directions);

/// One side of a link: its array, how it beamforms, and what follows from
/// the two (codebook and K_BF).
struct Transceiver {
    ArrayConfig array;
    BfArchitecture arch;
    BeamCodebook codebook;
    std::int32_t kbf = 1;

    static Transceiver make(const ArrayConfig& array, const BfArchitecture& arch);
    static Transceiver gnb(std::int32_t elements, BfArchitecture arch) { return make(ArrayConfig::gnb(elements), arch); }
    /// A single-element UE is forced to the omni architecture.
    static Transceiver ue(std::int32_t elements, BfArchitecture arch) {
        return make(ArrayConfig::ue(elements), elements == 1 ? BfArchitecture::omni() : arch);
    }
};

}  // namespace nrbm
