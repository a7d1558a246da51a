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

#include <random>

#include "../support/oracles.hpp"
#include "nrbm/error.hpp"
#include "nrbm/ia.hpp"

using nrbm::BfArchitecture;
using nrbm::Millis;
using nrbm::SsBurstConfig;
using nrbm::Transceiver;

namespace {

BfArchitecture arch(const char* name) {
    const auto kind = nrbm::parse_bf_kind(name);
    return BfArchitecture{kind, 2};
}

Millis t_ia(int m_gnb, const char* a_gnb, int m_ue, const char* a_ue, int n_ss, int t_ss, int scs) {
    const auto plan = nrbm::sweep_block_count(Transceiver::gnb(m_gnb, arch(a_gnb)), Transceiver::ue(m_ue, arch(a_ue)));
    return nrbm::ia_delay(plan, SsBurstConfig::make(n_ss, t_ss, scs, false));
}

}  // namespace

TEST_CASE("sweep block count") {
    CHECK(nrbm::sweep_block_count(Transceiver::gnb(4, arch("analog")), Transceiver::ue(4, arch("analog"))).s_d == 12);
    CHECK(nrbm::sweep_block_count(Transceiver::gnb(64, arch("analog")), Transceiver::ue(16, arch("analog"))).s_d ==
          2100);
    CHECK(nrbm::sweep_block_count(Transceiver::gnb(64, arch("analog")), Transceiver::ue(16, arch("hybrid"))).s_d ==
          300);
    CHECK(nrbm::sweep_block_count(Transceiver::gnb(64, arch("digital")), Transceiver::ue(1, arch("analog"))).s_d == 1);
}

TEST_CASE("S_D equals an exhaustive pair enumeration") {
    for (int mg : {4, 16, 64}) {
        for (int mu : {1, 4, 16, 64}) {
            for (const char* ag : {"analog", "hybrid", "digital"}) {
                for (const char* au : {"analog", "hybrid", "digital"}) {
                    const auto g = Transceiver::gnb(mg, arch(ag));
                    const auto u = Transceiver::ue(mu, arch(au));
                    CAPTURE(mg);
                    CAPTURE(mu);
                    CHECK(nrbm::sweep_block_count(g, u).s_d ==
                          oracle::sweep_blocks(g.codebook.total_directions, g.kbf, u.codebook.total_directions, u.kbf));
                }
            }
        }
    }
}

TEST_CASE("IA delay examples") {
    CHECK(t_ia(4, "analog", 4, "analog", 8, 20, 240) == Millis::parse("20.11608125"));
    CHECK(t_ia(64, "analog", 16, "hybrid", 8, 20, 240) == Millis::parse("740.11608125"));
    CHECK(t_ia(64, "analog", 16, "analog", 8, 20, 240) == Millis::parse("5240.11608125"));
    CHECK(t_ia(64, "analog", 16, "digital", 8, 20, 240) == Millis::parse("360.17858125"));
    CHECK(t_ia(16, "digital", 16, "analog", 8, 20, 240) == Millis::parse("100.05358125"));
    CHECK(t_ia(64, "digital", 1, "analog", 8, 20, 240) == Millis::parse("0.02675625"));
    CHECK(t_ia(4, "analog", 4, "analog", 64, 20, 120) == Millis::parse("0.7321625"));
    CHECK(t_ia(4, "analog", 4, "analog", 64, 20, 240) == Millis::parse("0.36608125"));
    CHECK(t_ia(64, "analog", 1, "analog", 64, 20, 120) == Millis::parse("3.1071625"));
}

TEST_CASE("IA delay matches a block-by-block burst timeline") {
    // Every S_D up to 4096 for every burst size, spacing and a few periods.
    for (int scs : {120, 240}) {
        for (int n_ss : {8, 16, 32, 64}) {
            for (int t_ss : {5, 20, 160}) {
                const auto burst = SsBurstConfig::make(n_ss, t_ss, scs, false);
                for (std::int64_t s_d = 1; s_d <= 4096; ++s_d) {
                    nrbm::SweepPlan plan;
                    plan.s_d = s_d;
                    const auto expected = Millis::ratio(oracle::ia_delay_units(s_d, n_ss, t_ss, scs), oracle::kUnitsPerMs);
                    if (nrbm::ia_delay(plan, burst) != expected) {
                        FAIL_CHECK("mismatch at s_d=" << s_d << " n_ss=" << n_ss << " t_ss=" << t_ss << " scs=" << scs);
                    }
                }
            }
        }
    }
}

TEST_CASE("IA delay properties") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(1, 5000);
    const int sizes[] = {8, 16, 32, 64};
    const int periods[] = {5, 10, 20, 40, 80, 160};
    for (int i = 0; i < 2000; ++i) {
        const int n_ss = sizes[rng() % 4];
        const int t_ss = periods[rng() % 6];
        const int scs = rng() % 2 ? 120 : 240;
        const auto burst = SsBurstConfig::make(n_ss, t_ss, scs, false);
        nrbm::SweepPlan a;
        a.s_d = pick(rng);
        nrbm::SweepPlan b = a;
        b.s_d = a.s_d + 1;
        // monotone in S_D
        CHECK(nrbm::ia_delay(a, burst) < nrbm::ia_delay(b, burst));
        // a sweep that fits one burst does not depend on T_SS
        if (a.s_d <= n_ss) {
            CHECK(nrbm::ia_delay(a, burst) == nrbm::ia_delay(a, SsBurstConfig::make(n_ss, 160, scs, false)));
        }
        // more blocks per burst never hurt
        if (n_ss < 64) {
            CHECK(nrbm::ia_delay(a, SsBurstConfig::make(n_ss * 2, t_ss, scs, false)) <= nrbm::ia_delay(a, burst));
        }
        // 240 kHz finishes no later than 120 kHz
        CHECK(nrbm::ia_delay(a, SsBurstConfig::make(n_ss, t_ss, 240, false)) <=
              nrbm::ia_delay(a, SsBurstConfig::make(n_ss, t_ss, 120, false)));
    }
}

TEST_CASE("beam report delay") {
    const auto burst8 = SsBurstConfig::make(8, 20, 120, false);
    const auto burst64 = SsBurstConfig::make(64, 20, 120, false);
    const auto sa = nrbm::FrameworkConfig::sa();
    CHECK(nrbm::beam_report_delay(sa, Transceiver::gnb(4, arch("analog")), burst8) == Millis::parse("0.0625"));
    CHECK(nrbm::beam_report_delay(sa, Transceiver::gnb(16, arch("analog")), burst8) == Millis::parse("0.5"));
    CHECK(nrbm::beam_report_delay(sa, Transceiver::gnb(64, arch("analog")), burst64) == Millis::parse("1.5625"));
    CHECK(nrbm::beam_report_delay(sa, Transceiver::gnb(64, arch("digital")), burst8) == Millis::parse("0.0625"));
    // 25 occasions, 8 per burst: three full bursts plus one occasion.
    CHECK(nrbm::beam_report_delay(sa, Transceiver::gnb(64, arch("analog")), burst8) == Millis::parse("60.0625"));
    CHECK(nrbm::rach_occasions(Transceiver::gnb(64, arch("analog"))) == 25);

    const auto nsa = nrbm::FrameworkConfig::nsa(nrbm::FrameworkKind::NsaDl, Millis::parse("0.8"));
    CHECK(nrbm::beam_report_delay(nsa, Transceiver::gnb(64, arch("analog")), burst8) == Millis::parse("0.8"));
    nrbm::FrameworkConfig missing;
    missing.kind = nrbm::FrameworkKind::NsaDl;
    CHECK_THROWS_AS(nrbm::beam_report_delay(missing, Transceiver::gnb(4, arch("analog")), burst8),
                    nrbm::ValidationError);
}

TEST_CASE("total IA latency") {
    const auto burst = SsBurstConfig::make(64, 20, 120, false);
    const auto g = Transceiver::gnb(4, arch("analog"));
    const auto plan = nrbm::sweep_block_count(g, Transceiver::ue(4, arch("analog")));
    const auto lat = nrbm::ia_total_latency(nrbm::FrameworkConfig::sa(), plan, burst, g, true);
    CHECK(lat.search_wait == Millis::whole(10));
    CHECK(lat.total() == Millis::parse("0.7321625") + Millis::parse("0.0625") + Millis::whole(10));
    CHECK(nrbm::ia_total_latency(nrbm::FrameworkConfig::sa(), plan, burst, g).search_wait.is_zero());
}

TEST_CASE("framework parsing") {
    CHECK(nrbm::parse_framework("sa") == nrbm::FrameworkKind::SaDl);
    CHECK(nrbm::parse_framework("nsa-ul") == nrbm::FrameworkKind::NsaUl);
    CHECK_THROWS_AS(nrbm::parse_framework("lte"), nrbm::ValidationError);
    CHECK(nrbm::parse_rlf_detection("srs") == nrbm::RlfDetection::GnbSounding);
}
