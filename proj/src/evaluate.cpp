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

#include "nrbm/evaluate.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "nrbm/csv.hpp"
#include "nrbm/error.hpp"
#include "nrbm/ia.hpp"
#include "nrbm/overhead.hpp"
#include "nrbm/tracking.hpp"

namespace nrbm {

namespace {

Cells ia_delay_cells(const ParamSet& ps, unsigned /*threads*/) {
    const SsBurstConfig burst = build_burst(ps);
    const Transceiver gnb = build_gnb(ps);
    const Transceiver ue = build_ue(ps);
    const SweepPlan plan = sweep_block_count(gnb, ue);
    return {format_count(gnb.codebook.total_directions), format_count(ue.codebook.total_directions),
            format_count(gnb.kbf),   format_count(ue.kbf),
            format_count(plan.s_d), format_duration(ia_delay(plan, burst))};
}

Cells report_delay_cells(const ParamSet& ps, unsigned /*threads*/) {
    const SsBurstConfig burst = build_burst(ps);
    const Transceiver gnb = build_gnb(ps);
    const Transceiver ue = build_ue(ps);
    const FrameworkConfig fw = build_framework(ps);
    const SweepPlan plan = sweep_block_count(gnb, ue);
    const IaLatency lat = ia_total_latency(fw, plan, burst, gnb, ps.get_bool("search_wait"));
    const std::int64_t occasions = fw.is_standalone() ? rach_occasions(gnb) : 1;
    return {format_count(occasions), format_duration(lat.sweep), format_duration(lat.report),
            format_duration(lat.search_wait), format_duration(lat.total())};
}

Cells tracking_delay_cells(const ParamSet& ps, unsigned /*threads*/) {
    const SsBurstConfig burst = build_burst(ps);
    const CsiRsConfig csi = build_csi(ps);
    const Transceiver gnb = build_gnb(ps);
    const auto scenario = TrackingScenario::make(static_cast<std::int32_t>(ps.get_int("n_user")), csi.n_csi_rx,
                                                 gnb.codebook.total_directions);
    const Millis window = csi_window(burst);
    const std::int64_t n_csi = csi_count(window, csi, burst.numerology);
    if (n_csi < 1) throw ValidationError("csi_slots", "no CSI-RS schedulable in window");
    const std::string offset =
        csi.option == CsiOption::Opt2 ? format_duration(csi_offset(window, csi, burst.numerology)) : "";
    return {format_duration(csi.period(burst.numerology)), format_duration(window), format_count(n_csi), offset,
            format_count(scenario.z_csi), format_duration(tracking_delay(scenario, csi, burst))};
}

Cells rlf_cells(const ParamSet& ps, unsigned /*threads*/) {
    const SsBurstConfig burst = build_burst(ps);
    const Transceiver gnb = build_gnb(ps);
    const Transceiver ue = build_ue(ps);
    const FrameworkConfig fw = build_framework(ps);
    const SweepPlan plan = sweep_block_count(gnb, ue);
    return {format_count(plan.s_d), format_duration(ia_delay(plan, burst)),
            format_duration(rlf_delay(fw, plan, burst))};
}

Cells neighbors_cells(const ParamSet& ps, unsigned /*threads*/) {
    const SsBurstConfig burst = build_burst(ps);
    const CsiRsConfig csi = build_csi(ps);
    const std::int64_t n_csi = csi_count(csi_window(burst), csi, burst.numerology);
    const std::int64_t capacity = orthogonal_csi_capacity(burst, csi);
    return {format_count(n_csi), format_count(capacity),
            n_csi > 0 ? format_count(max_neighbors(capacity, n_csi)) : ""};
}

Cells overhead_cells(const ParamSet& ps, unsigned /*threads*/) {
    const SsBurstConfig burst = build_burst(ps);
    const CsiRsConfig csi = build_csi(ps);
    const Transceiver gnb = build_gnb(ps);
    const FrameworkConfig fw = build_framework(ps);
    const auto rach_scs = static_cast<std::int32_t>(ps.get_int("rach_scs"));
    const std::int64_t n_csi = csi_count(csi_window(burst), csi, burst.numerology);
    const OverheadReport r = overhead_report(fw, gnb, burst, csi, n_csi, rach_scs);
    return {format_count(n_csi),         render_decimal(ss_resource_area(burst)),
            format_number(r.omega_5ms),  format_number(r.omega_tss),
            format_number(r.omega_csi),  format_number(r.omega_tot),
            format_number(r.omega_br)};
}

Cells misdetection_cells(const ParamSet& ps, unsigned threads) {
    const MisdetectionSetup setup = build_misdetection(ps);
    const std::int64_t trials = ps.get_int("trials");
    const std::int64_t seed = ps.get_int("seed");
    if (seed < 0) throw ValidationError("seed", "must be >= 0");
    const MisdetectionEstimate est =
        misdetection_probability(setup, trials, static_cast<std::uint64_t>(seed), threads);
    return {format_number(est.estimate), format_number(est.confidence_halfwidth), format_count(est.misdetections)};
}

const std::vector<std::string> kBurstKeys{"scs", "nss", "tss"};

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

const std::vector<Metric>& metric_registry() {
    static const std::vector<Metric> registry = {
        {"ia-delay", "exhaustive-sweep initial access delay",
         concat({kBurstKeys, {"gnb", "ue", "arch", "hybrid_nu"}}),
         {"gnb_directions", "ue_directions", "gnb_kbf", "ue_kbf", "s_d", "t_ia_ms"}, false, ia_delay_cells},
        {"report-delay", "beam reporting delay and total initial access latency",
         concat({kBurstKeys, {"gnb", "ue", "arch", "hybrid_nu", "framework", "lte_latency", "search_wait"}}),
         {"rach_occasions", "t_ia_ms", "t_br_ms", "t_search_wait_ms", "t_ia_total_ms"}, false, report_delay_cells},
        {"tracking-delay", "average delay to the first CSI-RS",
         {"scs", "tss", "gnb", "csi_option", "csi_slots", "n_user", "csi_rx"},
         {"t_csi_ms", "window_ms", "n_csi", "offset_ms", "z_csi", "t_tr_ms"}, false, tracking_delay_cells},
        {"rlf", "radio link failure recovery delay",
         concat({kBurstKeys,
                 {"gnb", "ue", "arch", "hybrid_nu", "framework", "lte_latency", "srs_period", "srs_miss",
                  "rlf_detection"}}),
         {"s_d", "t_ia_ms", "t_rlf_ms"}, false, rlf_cells},
        {"neighbors", "orthogonal CSI-RS capacity and neighbor limit",
         {"scs", "tss", "bandwidth_mhz", "csi_option", "csi_slots", "csi_symbols", "rho"},
         {"n_csi", "capacity", "max_neighbors"}, false, neighbors_cells},
        {"overhead", "SS burst, CSI-RS and beam reporting overhead",
         concat({kBurstKeys,
                 {"diversity", "bandwidth_mhz", "csi_option", "csi_slots", "csi_symbols", "rho", "gnb", "arch",
                  "framework", "rach_scs"}}),
         {"n_csi", "r_ss", "omega_5ms", "omega_tss", "omega_csi", "omega_tot", "omega_br"}, false, overhead_cells},
        {"misdetection", "Monte Carlo misdetection probability",
         {"scs", "diversity", "gnb", "ue", "arch", "hybrid_nu", "framework", "density", "region_radius", "tx_power",
          "carrier_ghz", "snr_threshold", "noise_figure", "los_alpha", "los_beta", "los_sigma", "nlos_alpha",
          "nlos_beta", "nlos_sigma", "los_decay", "outage_decay", "outage_offset", "trials", "seed"},
         {"p_md", "ci_halfwidth", "misdetections"}, true, misdetection_cells},
    };
    return registry;
}

const Metric& find_metric(std::string_view name) {
    for (const auto& m : metric_registry()) {
        if (m.name == name) return m;
    }
    throw ValidationError("metric", fmt::format("unknown metric '{}'", name));
}

namespace {

std::vector<std::string> input_columns(const Metric& metric, const std::vector<std::string>& extra) {
    std::vector<std::string> cols = metric.inputs;
    for (const auto& key : extra) {
        if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
    return cols;
}

}  // namespace

Cells metric_header(const Metric& metric, const std::vector<std::string>& extra_inputs) {
    Cells header = input_columns(metric, extra_inputs);
    header.insert(header.end(), metric.outputs.begin(), metric.outputs.end());
    return header;
}

Cells metric_row(const Metric& metric, const ParamSet& params, unsigned threads,
                 const std::vector<std::string>& extra_inputs) {
    Cells row;
    for (const auto& key : input_columns(metric, extra_inputs)) row.push_back(params.get(key));
    Cells out = metric.compute(params, threads == 0 ? 1 : threads);
    row.insert(row.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
    return row;
}

}  // namespace nrbm
