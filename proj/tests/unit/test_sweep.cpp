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

#include <sstream>

#include "nrbm/csv.hpp"
#include "nrbm/error.hpp"
#include "nrbm/evaluate.hpp"
#include "nrbm/figures.hpp"
#include "nrbm/sweep.hpp"

using nrbm::SweepAxis;
using nrbm::SweepSpec;

TEST_CASE("number formatting") {
    CHECK(nrbm::format_number(0.03287808) == "0.03287808");
    CHECK(nrbm::format_number(0.0) == "0");
    CHECK(nrbm::format_number(1.0 / 3.0) == "0.3333333333");
    CHECK(nrbm::format_number(65756160.0) == "65756160");
    CHECK(nrbm::format_number(1234567890123.0) == "1.23456789e+12");
    CHECK(nrbm::format_count(-3) == "-3");
}

TEST_CASE("CSV quoting round-trips") {
    const std::vector<std::string> fields{"plain", "analog,hybrid", "say \"hi\"", ""};
    const std::string line = nrbm::csv_line(fields);
    CHECK(line == "plain,\"analog,hybrid\",\"say \"\"hi\"\"\",");
    CHECK(nrbm::csv_split(line) == fields);
}

TEST_CASE("axis parsing") {
    auto a = SweepAxis::parse("nss=8,16,32");
    CHECK(a.keys == std::vector<std::string>{"nss"});
    CHECK(a.values.size() == 3);
    a = SweepAxis::parse("arch=analog,analog;analog,hybrid");
    CHECK(a.values.size() == 2);
    CHECK(a.values[1][0] == "analog,hybrid");
    a = SweepAxis::parse("gnb+ue=4+4,64+16");
    CHECK(a.keys == std::vector<std::string>{"gnb", "ue"});
    CHECK(a.values[1] == std::vector<std::string>{"64", "16"});
    CHECK_THROWS_AS(SweepAxis::parse("nss"), nrbm::ValidationError);
}

TEST_CASE("grid order and size") {
    SweepSpec spec;
    spec.metric = "ia-delay";
    spec.axes = {SweepAxis::parse("nss=8,64"), SweepAxis::parse("tss=5,10,20")};
    CHECK(spec.size() == 6);
    CHECK(spec.point(0).get("nss") == "8");
    CHECK(spec.point(0).get("tss") == "5");
    CHECK(spec.point(1).get("tss") == "10");
    CHECK(spec.point(3).get("nss") == "64");
    CHECK(spec.point(5).get("tss") == "20");

    const auto result = nrbm::run_sweep(spec, 3);
    CHECK(result.rows.size() == 6);
    CHECK(result.header.back() == "t_ia_ms");
}

TEST_CASE("sweep rejects bad axes") {
    SweepSpec spec;
    spec.metric = "ia-delay";
    spec.axes = {SweepAxis::parse("bogus=1,2")};
    CHECK_THROWS_AS(spec.validate(), nrbm::ValidationError);
    spec.axes = {SweepAxis::parse("nss=8"), SweepAxis::parse("nss=16")};
    CHECK_THROWS_AS(spec.validate(), nrbm::ValidationError);
    spec.axes = {SweepAxis::parse("gnb+ue=4+4,16")};
    CHECK_THROWS_AS(spec.validate(), nrbm::ValidationError);
    spec.metric = "nope";
    spec.axes = {};
    CHECK_THROWS_AS(spec.validate(), nrbm::ValidationError);
}

TEST_CASE("a failing grid point names itself") {
    SweepSpec spec;
    spec.metric = "ia-delay";
    spec.axes = {SweepAxis::parse("nss=8,12")};
    CHECK_THROWS_WITH_AS(nrbm::run_sweep(spec, 2), doctest::Contains("nss=12"), nrbm::ValidationError);
}

TEST_CASE("sweep output is independent of the worker count") {
    for (const auto& fig : nrbm::figure_catalog()) {
        CAPTURE(fig.name);
        CHECK(nrbm::render_figure(fig, 1) == nrbm::render_figure(fig, 5));
    }
    SweepSpec mc;
    mc.metric = "misdetection";
    mc.fixed.set("trials", "2000");
    mc.axes = {SweepAxis::parse("density=10,20,30")};
    const auto a = nrbm::run_sweep(mc, 1);
    const auto b = nrbm::run_sweep(mc, 4);
    CHECK(a.rows == b.rows);
}

TEST_CASE("metric rows") {
    auto ps = nrbm::ParamSet::defaults();
    ps.set("tss", "5");
    const auto& nb = nrbm::find_metric("neighbors");
    const auto row = nrbm::metric_row(nb, ps);
    CHECK(row.back() == "");
    CHECK(row[row.size() - 3] == "0");
    CHECK_THROWS_AS(nrbm::metric_row(nrbm::find_metric("tracking-delay"), ps), nrbm::ValidationError);
    CHECK_THROWS_AS(nrbm::find_metric("nope"), nrbm::ValidationError);
    for (const auto& m : nrbm::metric_registry()) {
        CHECK(nrbm::metric_header(m).size() == m.inputs.size() + m.outputs.size());
    }
}
