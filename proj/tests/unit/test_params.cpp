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

#include <algorithm>

#include "nrbm/error.hpp"
#include "nrbm/params.hpp"

using nrbm::ParamSet;

namespace {

bool has_violation(const std::vector<nrbm::Violation>& v, const std::string& field, const std::string& text) {
    return std::any_of(v.begin(), v.end(), [&](const nrbm::Violation& x) {
        return x.field == field && x.message.find(text) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("defaults are valid") {
    CHECK(nrbm::validate(ParamSet::defaults()).empty());
}

TEST_CASE("violations name the field and the constraint") {
    auto ps = ParamSet::defaults();
    ps.set("tss", "7");
    auto v = nrbm::validate(ps);
    CHECK(has_violation(v, "tss", "T_SS must be in {5,10,20,40,80,160}"));

    ps = ParamSet::defaults();
    ps.set("rho", "1.5");
    CHECK(has_violation(nrbm::validate(ps), "rho", "ρ ∈ (0,1]"));

    ps = ParamSet::defaults();
    ps.set("nss", "12");
    ps.set("csi_slots", "7");
    ps.set("scs", "60");
    v = nrbm::validate(ps);
    CHECK(has_violation(v, "nss", "{8,16,32,64}"));
    CHECK(has_violation(v, "csi_slots", "640"));
    CHECK(has_violation(v, "scs", "120"));
}

TEST_CASE("validation reports every problem") {
    auto ps = ParamSet::defaults();
    ps.set("tss", "7");
    ps.set("rho", "0");
    ps.set("csi_rx", "9");
    ps.set("trials", "5");
    ps.set("arch", "analog");
    const auto v = nrbm::validate(ps);
    for (const char* f : {"tss", "rho", "csi_rx", "trials", "arch"}) {
        CAPTURE(f);
        CHECK(std::any_of(v.begin(), v.end(), [&](const nrbm::Violation& x) { return x.field == f; }));
    }
}

TEST_CASE("typed access") {
    auto ps = ParamSet::defaults();
    CHECK(ps.get_int("nss") == 64);
    CHECK(ps.get_double("rho") == 0.072);
    CHECK(ps.get_millis("tss") == nrbm::Millis::whole(20));
    CHECK_FALSE(ps.get_bool("diversity"));
    CHECK_FALSE(ps.is_set("srs_period"));
    ps.set("nss", "sixty");
    CHECK_THROWS_AS((void)ps.get_int("nss"), nrbm::ValidationError);
    CHECK_THROWS_AS(ps.set("bogus", "1"), nrbm::ValidationError);
}

TEST_CASE("config text") {
    auto ps = ParamSet::defaults();
    ps.load_string(
        "# comment\n"
        "; another\n"
        "[burst]\n"
        "nss = 8\n"
        "tss=40\n"
        "[beams]\n"
        "arch = digital,analog\n");
    CHECK(ps.get("nss") == "8");
    CHECK(ps.get("tss") == "40");
    CHECK(ps.get("arch") == "digital,analog");
    CHECK(ps.get("scs") == "120");

    auto other = ParamSet::defaults();
    CHECK_THROWS_WITH_AS(other.load_string("[beams]\nnss = 8\n"), doctest::Contains("[burst]"), nrbm::ValidationError);
    CHECK_THROWS_AS(other.load_string("[burst]\nfoo = 8\n"), nrbm::ValidationError);
    CHECK_THROWS_AS(other.load_string("[burst\nnss = 8\n"), nrbm::ValidationError);
    CHECK_THROWS_AS(other.load_file("/nonexistent/nr.ini"), nrbm::IoError);
}

TEST_CASE("default config text round-trips") {
    auto ps = ParamSet::defaults();
    ps.load_string(nrbm::default_config_text());
    CHECK(ps.values() == ParamSet::defaults().values());
}

TEST_CASE("builders") {
    auto ps = ParamSet::defaults();
    ps.set("arch", "analog:hybrid");
    ps.set("ue", "16");
    CHECK(nrbm::build_ue(ps).kbf == 8);
    ps.set("ue", "1");
    CHECK(nrbm::build_ue(ps).arch.kind == nrbm::BfKind::Omni);
    ps.set("arch", "omni,analog");
    CHECK_THROWS_AS(nrbm::build_gnb(ps), nrbm::ValidationError);

    ps = ParamSet::defaults();
    ps.set("framework", "nsa-ul");
    ps.set("srs_period", "5");
    ps.set("srs_miss", "3");
    const auto fw = nrbm::build_framework(ps);
    CHECK(fw.kind == nrbm::FrameworkKind::NsaUl);
    CHECK(*fw.srs_period == nrbm::Millis::whole(5));
    CHECK(*fw.srs_miss_count == 3);

    ps = ParamSet::defaults();
    ps.set("gnb", "12");
    try {
        (void)nrbm::build_gnb(ps);
        FAIL("expected a validation error");
    } catch (const nrbm::ValidationError& e) {
        CHECK(e.field() == "gnb");
    }
    ps = ParamSet::defaults();
    ps.set("scs", "240");
    ps.set("diversity", "on");
    CHECK(nrbm::build_burst(ps).n_rep == 5);
    CHECK(nrbm::build_deployment(ps).bandwidth_per_rep_hz == 240.0 * 240e3);
}
