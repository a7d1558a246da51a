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

#include "nrbm/error.hpp"
#include "nrbm/numerology.hpp"

using nrbm::Millis;

TEST_CASE("slot and symbol durations") {
    const auto n120 = nrbm::numerology_from_spacing(120);
    CHECK(n120.n == 3);
    CHECK(n120.slot == Millis::ratio(1, 8));
    CHECK(n120.symbol == Millis::parse("0.00891875"));
    const auto n240 = nrbm::numerology_from_spacing(240);
    CHECK(n240.n == 4);
    CHECK(n240.slot == Millis::ratio(1, 16));
    CHECK(n240.symbol == Millis::parse("0.004459375"));
    CHECK_THROWS_AS(nrbm::numerology_from_spacing(100), nrbm::ValidationError);
}

TEST_CASE("SS block duration matches the 35.68 / 17.84 us block lengths") {
    // 4 symbols per block.
    CHECK((nrbm::numerology_from_spacing(120).symbol * 4).to_double() == doctest::Approx(0.03568).epsilon(1e-3));
    CHECK((nrbm::numerology_from_spacing(240).symbol * 4).to_double() == doctest::Approx(0.01784).epsilon(1e-3));
}

TEST_CASE("burst config validation") {
    CHECK_NOTHROW(nrbm::SsBurstConfig::make(64, 20, 120, false));
    CHECK_THROWS_WITH_AS(nrbm::SsBurstConfig::make(64, 7, 120, false), doctest::Contains("T_SS must be in {5,10,20,40,80,160}"),
                         nrbm::ValidationError);
    CHECK_THROWS_AS(nrbm::SsBurstConfig::make(12, 20, 120, false), nrbm::ValidationError);
    CHECK_THROWS_AS(nrbm::SsBurstConfig::make(64, 20, 60, false), nrbm::ValidationError);
    try {
        (void)nrbm::SsBurstConfig::make(12, 20, 120, false);
    } catch (const nrbm::ValidationError& e) {
        CHECK(e.field() == "nss");
    }
}

TEST_CASE("repetitions") {
    CHECK(nrbm::repetitions_for(120, false) == 1);
    CHECK(nrbm::repetitions_for(240, false) == 1);
    CHECK(nrbm::repetitions_for(120, true) == 11);
    CHECK(nrbm::repetitions_for(240, true) == 5);
    CHECK(nrbm::SsBurstConfig::make(64, 20, 120, true).n_rep == 11);
}

TEST_CASE("burst tail") {
    const auto n120 = nrbm::numerology_from_spacing(120);
    const auto n240 = nrbm::numerology_from_spacing(240);
    CHECK(nrbm::burst_tail_time(1, n120) == Millis::parse("0.0535125"));
    CHECK(nrbm::burst_tail_time(2, n120) == Millis::parse("0.1071625"));
    CHECK(nrbm::burst_tail_time(4, n240) == Millis::parse("0.11608125"));
    CHECK(nrbm::burst_tail_time(1, n240) == Millis::parse("0.02675625"));
    CHECK_THROWS(nrbm::burst_tail_time(0, n120));
}

TEST_CASE("a full burst fits its maximum span") {
    for (int scs : {120, 240}) {
        const auto num = nrbm::numerology_from_spacing(scs);
        for (int n = 1; n <= nrbm::kMaxSsBlocksPerBurst; ++n) {
            CHECK(nrbm::burst_tail_time(n, num) <= nrbm::ss_burst_max_duration(num));
            if (n > 1) CHECK(nrbm::burst_tail_time(n, num) > nrbm::burst_tail_time(n - 1, num));
        }
    }
}
