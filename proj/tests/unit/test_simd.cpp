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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "nrbm/simd/link_budget.hpp"

namespace simd = nrbm::simd;

namespace {

struct Lanes {
    std::vector<double> log10_d;
    std::vector<double> shadow;
    std::vector<std::int32_t> state;

    explicit Lanes(std::size_t n, std::uint64_t seed) : log10_d(n), shadow(n), state(n) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> d(0.0, 2.7);
        std::normal_distribution<double> z(0.0, 8.0);
        for (std::size_t i = 0; i < n; ++i) {
            log10_d[i] = d(rng);
            shadow[i] = z(rng);
            state[i] = static_cast<std::int32_t>(rng() % 3);
        }
    }
    [[nodiscard]] simd::LinkLanes view() const { return {log10_d, shadow, state}; }
};

const simd::PathlossCoeffs kCoeffs{61.4, 20.0, 72.0, 29.2};

}  // namespace

TEST_CASE("scalar kernel values") {
    const std::vector<double> log10_d{2.0, 2.0, 2.0};
    const std::vector<double> shadow{1.0, -1.0, 5.0};
    const std::vector<std::int32_t> state{simd::kStateLos, simd::kStateNlos, simd::kStateOutage};
    std::vector<double> out(3);
    simd::scalar::link_snr_db(kCoeffs, 50.0, {log10_d, shadow, state}, out);
    CHECK(out[0] == doctest::Approx(50.0 - (61.4 + 40.0 + 1.0)));
    CHECK(out[1] == doctest::Approx(50.0 - (72.0 + 58.4 - 1.0)));
    CHECK(std::isinf(out[2]));
    CHECK(out[2] < 0);
    CHECK(simd::scalar::max_value(out) == out[0]);
    CHECK(std::isinf(simd::scalar::max_value({})));
}

TEST_CASE("length mismatch is rejected") {
    const std::vector<double> a(4), b(3);
    const std::vector<std::int32_t> s(4);
    std::vector<double> out(4);
    CHECK_THROWS(simd::link_snr_db(kCoeffs, 0.0, {a, b, s}, out));
}

TEST_CASE("AVX2 kernel is bit-identical to the scalar kernel") {
    if (!simd::isa_available(simd::Isa::Avx2)) {
        MESSAGE("AVX2 not available on this host; skipping");
        return;
    }
    for (std::size_t n : {0U, 1U, 2U, 3U, 4U, 5U, 7U, 8U, 13U, 31U, 64U, 257U, 1023U}) {
        const Lanes lanes(n, 1000 + n);
        std::vector<double> ref(n), vec(n);
        simd::scalar::link_snr_db(kCoeffs, 42.5, lanes.view(), ref);
        simd::avx2::link_snr_db(kCoeffs, 42.5, lanes.view(), vec);
        for (std::size_t i = 0; i < n; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            CHECK(std::bit_cast<std::uint64_t>(ref[i]) == std::bit_cast<std::uint64_t>(vec[i]));
        }
        CHECK(std::bit_cast<std::uint64_t>(simd::scalar::max_value(ref)) ==
              std::bit_cast<std::uint64_t>(simd::avx2::max_value(vec)));
    }
}

TEST_CASE("dispatch") {
    CHECK(simd::isa_available(simd::Isa::Scalar));
    const auto isa = simd::active_isa();
    CHECK(simd::isa_available(isa));
    CHECK((simd::to_string(isa) == "scalar" || simd::to_string(isa) == "avx2"));
}
