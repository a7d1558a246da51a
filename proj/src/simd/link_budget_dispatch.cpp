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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nrbm/simd/link_budget.hpp"

namespace nrbm::simd {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(NRBM_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() {
    static const Isa selected = [] {
        if (const char* forced = std::getenv("NR_BEAMMGR_ISA"); forced != nullptr && std::string(forced) == "scalar") {
            return Isa::Scalar;
        }
        return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return selected;
}

namespace {

void check_lanes(const LinkLanes& lanes, std::span<double> out) {
    if (lanes.log10_distance.size() != out.size() || lanes.shadow_db.size() != out.size() ||
        lanes.state.size() != out.size()) {
        throw std::invalid_argument("link lanes and output must have equal length");
    }
}

}  // namespace

void link_snr_db(Isa isa, const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes,
                 std::span<double> out) {
    check_lanes(lanes, out);
#if defined(NRBM_BUILD_AVX2)
    if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) {
        avx2::link_snr_db(coeffs, budget_db, lanes, out);
        return;
    }
#endif
    if (isa == Isa::Avx2) throw std::runtime_error("AVX2 kernel not available on this build/CPU");
    scalar::link_snr_db(coeffs, budget_db, lanes, out);
}

void link_snr_db(const PathlossCoeffs& coeffs, double budget_db, const LinkLanes& lanes, std::span<double> out) {
    link_snr_db(active_isa(), coeffs, budget_db, lanes, out);
}

double max_value(Isa isa, std::span<const double> values) {
#if defined(NRBM_BUILD_AVX2)
    if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return avx2::max_value(values);
#endif
    if (isa == Isa::Avx2) throw std::runtime_error("AVX2 kernel not available on this build/CPU");
    return scalar::max_value(values);
}

double max_value(std::span<const double> values) { return max_value(active_isa(), values); }

}  // namespace nrbm::simd
