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

#include <cmath>
#include <limits>

#include "nrbm/channel.hpp"
#include "nrbm/error.hpp"

using nrbm::BfArchitecture;
using nrbm::ChannelParams;
using nrbm::DeploymentModel;
using nrbm::LinkState;
using nrbm::MisdetectionSetup;
using nrbm::Transceiver;

namespace {

MisdetectionSetup setup_for(int m_gnb, int m_ue, double density, int scs = 120, bool diversity = false) {
    MisdetectionSetup s;
    s.model.gnb_density_per_km2 = density;
    s.gnb = Transceiver::gnb(m_gnb, BfArchitecture::analog());
    s.ue = Transceiver::ue(m_ue, BfArchitecture::analog());
    s.burst = nrbm::SsBurstConfig::make(64, 20, scs, diversity);
    s.model.bandwidth_per_rep_hz = 240.0 * scs * 1e3;
    return s;
}

}  // namespace

TEST_CASE("state probabilities") {
    const ChannelParams p;
    for (double d = 1.0; d <= 500.0; d += 7.3) {
        const auto s = nrbm::state_probabilities(p, d);
        CHECK(s.outage >= 0.0);
        CHECK(s.los >= 0.0);
        CHECK(s.nlos >= -1e-15);
        CHECK(s.outage + s.los + s.nlos == doctest::Approx(1.0));
    }
    // no outage below 156 m
    CHECK(nrbm::state_probabilities(p, 100.0).outage == 0.0);
    CHECK(nrbm::state_probabilities(p, 100.0).los == doctest::Approx(std::exp(-100.0 / 67.1)));
    CHECK(nrbm::state_probabilities(p, 300.0).outage == doctest::Approx(1.0 - std::exp(-10.0 + 5.2)));
}

TEST_CASE("pathloss") {
    const ChannelParams p;
    CHECK(nrbm::pathloss_db(p, LinkState::Los, 100.0) == doctest::Approx(61.4 + 40.0));
    CHECK(nrbm::pathloss_db(p, LinkState::Nlos, 100.0) == doctest::Approx(72.0 + 58.4));
    CHECK(nrbm::pathloss_db(p, LinkState::Los, 10.0, 3.0) == doctest::Approx(61.4 + 20.0 + 3.0));
    CHECK(std::isinf(nrbm::pathloss_db(p, LinkState::Outage, 100.0)));
    CHECK_THROWS(nrbm::pathloss_db(p, LinkState::Los, 0.0));
}

TEST_CASE("noise and link budget") {
    DeploymentModel m;
    CHECK(nrbm::noise_power_dbm(m) == doctest::Approx(-174.0 + 10.0 * std::log10(28.8e6) + 7.0));
    const double base = nrbm::link_snr_db(m, 12.0, 6.0, 100.0, 1);
    CHECK(base == doctest::Approx(30.0 + 18.0 - 100.0 - nrbm::noise_power_dbm(m)));
    CHECK(nrbm::link_snr_db(m, 12.0, 6.0, 100.0, 11) - base == doctest::Approx(5.0 * std::log10(11.0)));
    CHECK(base - nrbm::link_snr_db(m, 12.0, 6.0, 100.0, 1, 4) == doctest::Approx(10.0 * std::log10(4.0)));

    DeploymentModel wide = m;
    wide.bandwidth_per_rep_hz = 240.0 * 240e3;
    CHECK(base - nrbm::link_snr_db(wide, 12.0, 6.0, 100.0, 1) == doctest::Approx(3.0103).epsilon(1e-4));
    CHECK(std::isinf(nrbm::link_snr_db(m, 0, 0, std::numeric_limits<double>::infinity(), 1)));
}

TEST_CASE("deployment sampling is a pure function of seed and trial") {
    const DeploymentModel m;
    const ChannelParams p;
    const auto a = nrbm::sample_deployment(m, p, 11, 42);
    const auto b = nrbm::sample_deployment(m, p, 11, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].distance_m == b[i].distance_m);
        CHECK(a[i].shadowing_db == b[i].shadowing_db);
        CHECK(a[i].state == b[i].state);
        CHECK(a[i].distance_m > 0.0);
        CHECK(a[i].distance_m <= m.region_radius_m);
        if (a[i].state == LinkState::Outage) CHECK(a[i].shadowing_db == 0.0);
    }
    const auto c = nrbm::sample_deployment(m, p, 11, 43);
    const bool differs = c.size() != a.size() || (!a.empty() && c.front().distance_m != a.front().distance_m);
    CHECK(differs);
}

TEST_CASE("deployment statistics") {
    const DeploymentModel m;
    const ChannelParams p;
    double count = 0;
    double r2 = 0;
    std::int64_t links = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) {
        const auto s = nrbm::sample_deployment(m, p, 5, static_cast<std::uint64_t>(t));
        count += static_cast<double>(s.size());
        for (const auto& l : s) r2 += l.distance_m * l.distance_m;
        links += static_cast<std::int64_t>(s.size());
    }
    // Poisson mean lambda * pi R^2 = 7.85; uniform-in-disc E[d^2] = R^2 / 2.
    CHECK(count / trials == doctest::Approx(m.mean_gnb_count()).epsilon(0.03));
    CHECK(r2 / static_cast<double>(links) == doctest::Approx(500.0 * 500.0 / 2).epsilon(0.03));
}

TEST_CASE("trial outcome agrees with a direct per-link evaluation") {
    const auto s = setup_for(16, 4, 20);
    for (std::uint64_t t = 0; t < 500; ++t) {
        const auto links = nrbm::sample_deployment(s.model, s.params, 9, t);
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& l : links) {
            const double pl = nrbm::pathloss_db(s.params, l.state, l.distance_m, l.shadowing_db);
            best = std::max(best, nrbm::link_snr_db(s.model, s.gnb.codebook.boresight_gain_dbi,
                                                    s.ue.codebook.boresight_gain_dbi, pl, 1));
        }
        const auto out = nrbm::run_trial(s, 9, t);
        if (std::isinf(best)) {
            CHECK(std::isinf(out.best_snr_db));
        } else {
            CHECK(out.best_snr_db == doctest::Approx(best).epsilon(1e-12));
        }
        CHECK(out.detected == (best >= s.model.snr_threshold_db));
    }
}

TEST_CASE("misdetection estimate is independent of worker count") {
    const auto s = setup_for(4, 4, 10);
    const auto one = nrbm::misdetection_probability(s, 20000, 3, 1);
    for (unsigned threads : {2U, 4U, 8U}) {
        const auto many = nrbm::misdetection_probability(s, 20000, 3, threads);
        CHECK(many.misdetections == one.misdetections);
        CHECK(many.estimate == one.estimate);
    }
    CHECK(one.trials == 20000);
    CHECK(one.confidence_halfwidth > 0.0);
}

TEST_CASE("misdetection trends") {
    const auto sparse = nrbm::misdetection_probability(setup_for(4, 4, 10), 20000, 1, 2);
    const auto dense = nrbm::misdetection_probability(setup_for(4, 4, 40), 20000, 1, 2);
    const auto big = nrbm::misdetection_probability(setup_for(64, 16, 10), 20000, 1, 2);
    const auto rep = nrbm::misdetection_probability(setup_for(4, 4, 10, 120, true), 20000, 1, 2);
    CHECK(dense.estimate < sparse.estimate);
    CHECK(big.estimate < sparse.estimate);
    CHECK(rep.estimate <= sparse.estimate);
}

TEST_CASE("misdetection input checks") {
    CHECK_THROWS_AS(nrbm::misdetection_probability(setup_for(4, 4, 10), 10, 1, 1), nrbm::ValidationError);
    auto bad = setup_for(4, 4, 10);
    bad.model.gnb_density_per_km2 = -1;
    CHECK_THROWS_AS(nrbm::misdetection_probability(bad, 1000, 1, 1), nrbm::ValidationError);
}
