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

#include "nrbm/ia.hpp"

#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

FrameworkKind parse_framework(std::string_view text) {
    if (text == "sa" || text == "sa-dl") return FrameworkKind::SaDl;
    if (text == "nsa-dl") return FrameworkKind::NsaDl;
    if (text == "nsa-ul") return FrameworkKind::NsaUl;
    throw ValidationError("framework", fmt::format("unknown framework '{}'; expected sa|nsa-dl|nsa-ul", text));
}

std::string_view to_string(FrameworkKind kind) {
    switch (kind) {
        case FrameworkKind::SaDl: return "sa";
        case FrameworkKind::NsaDl: return "nsa-dl";
        case FrameworkKind::NsaUl: return "nsa-ul";
    }
    return "?";
}

RlfDetection parse_rlf_detection(std::string_view text) {
    if (text == "auto") return RlfDetection::Auto;
    if (text == "ue") return RlfDetection::UeNotified;
    if (text == "srs") return RlfDetection::GnbSounding;
    throw ValidationError("rlf_detection", fmt::format("unknown RLF detection '{}'; expected auto|ue|srs", text));
}

std::string_view to_string(RlfDetection mode) {
    switch (mode) {
        case RlfDetection::Auto: return "auto";
        case RlfDetection::UeNotified: return "ue";
        case RlfDetection::GnbSounding: return "srs";
    }
    return "?";
}

void FrameworkConfig::validate() const {
    if (kind == FrameworkKind::SaDl) return;
    if (!lte_latency) {
        throw ValidationError("lte_latency", "required for non-standalone frameworks");
    }
    if (*lte_latency <= Millis::whole(0)) {
        throw ValidationError("lte_latency", fmt::format("must be positive, got {}", lte_latency->to_string()));
    }
    if (srs_period && *srs_period <= Millis::whole(0)) {
        throw ValidationError("srs_period", fmt::format("must be positive, got {}", srs_period->to_string()));
    }
    if (srs_miss_count && *srs_miss_count < 1) {
        throw ValidationError("srs_miss", fmt::format("must be >= 1, got {}", *srs_miss_count));
    }
}

SweepPlan sweep_block_count(const Transceiver& gnb, const Transceiver& ue) {
    SweepPlan plan;
    plan.gnb_codebook = gnb.codebook;
    plan.ue_codebook = ue.codebook;
    plan.gnb_kbf = gnb.kbf;
    plan.ue_kbf = ue.kbf;
    plan.s_d = ceil_div(gnb.codebook.total_directions, gnb.kbf) * ceil_div(ue.codebook.total_directions, ue.kbf);
    return plan;
}

Millis ia_delay(const SweepPlan& plan, const SsBurstConfig& burst) {
    const std::int64_t bursts = ceil_div(plan.s_d, burst.n_ss);
    const std::int64_t left = plan.s_d - burst.n_ss * (bursts - 1);
    return (bursts - 1) * burst.t_ss + burst_tail_time(left, burst.numerology);
}

std::int64_t rach_occasions(const Transceiver& gnb) {
    return ceil_div(gnb.codebook.total_directions, 2 * std::int64_t{gnb.kbf});
}

Millis beam_report_delay(const FrameworkConfig& framework, const Transceiver& gnb, const SsBurstConfig& burst) {
    if (!framework.is_standalone()) {
        framework.validate();
        return *framework.lte_latency;
    }
    const std::int64_t occasions = rach_occasions(gnb);
    const std::int64_t bursts = ceil_div(occasions, burst.n_ss);
    const std::int64_t remaining = occasions - burst.n_ss * (bursts - 1);
    return (bursts - 1) * burst.t_ss + remaining * (burst.numerology.slot / 2);
}

IaLatency ia_total_latency(const FrameworkConfig& framework, const SweepPlan& plan, const SsBurstConfig& burst,
                           const Transceiver& gnb, bool include_search_wait) {
    IaLatency out;
    out.sweep = ia_delay(plan, burst);
    out.report = beam_report_delay(framework, gnb, burst);
    out.search_wait = include_search_wait ? burst.t_ss / 2 : Millis{};
    return out;
}

}  // namespace nrbm
