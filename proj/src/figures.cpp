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

#include "nrbm/figures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "nrbm/csv.hpp"

namespace nrbm {

namespace {

using Overrides = std::vector<std::pair<std::string, std::string>>;

FigureSpec make(std::string name, std::string title, std::string metric, const Overrides& fixed,
                std::vector<SweepAxis> axes) {
    SweepSpec sweep;
    sweep.metric = std::move(metric);
    for (const auto& [key, value] : fixed) sweep.fixed.set(key, value);
    sweep.axes = std::move(axes);
    return FigureSpec{std::move(name), std::move(title), std::move(sweep)};
}

SweepAxis array_pairs() {
    return SweepAxis::zipped({"gnb", "ue"},
                             {{"4", "4"}, {"16", "4"}, {"64", "4"}, {"16", "16"}, {"64", "16"}, {"64", "1"}});
}

SweepAxis spacing_diversity() {
    return SweepAxis::zipped({"scs", "diversity"}, {{"120", "off"}, {"120", "on"}, {"240", "off"}, {"240", "on"}});
}

const std::vector<std::string> kBurstSizes{"8", "16", "32", "64"};
const std::vector<std::string> kBurstPeriods{"5", "10", "20", "40", "80", "160"};
const std::vector<std::string> kRhos{"0.072", "0.1", "0.144", "0.2", "0.4", "0.5", "1"};

std::vector<FigureSpec> build_catalog() {
    std::vector<FigureSpec> out;
    const Overrides fig9_base{{"tss", "20"}, {"scs", "240"}};
    const std::pair<const char*, const char*> fig9_panels[] = {
        {"a", "analog,analog"}, {"b", "analog,hybrid"}, {"c", "analog,digital"}, {"d", "digital,analog"}};
    for (const auto& [panel, arch] : fig9_panels) {
        Overrides fixed = fig9_base;
        fixed.emplace_back("arch", arch);
        out.push_back(make(fmt::format("fig09{}_ia_delay_vs_nss", panel),
                           fmt::format("IA delay against N_SS, {} beamforming, T_SS 20 ms", arch), "ia-delay", fixed,
                           {array_pairs(), SweepAxis::single("nss", kBurstSizes)}));
    }
    out.push_back(make("fig10_ia_delay_vs_tss", "IA delay against T_SS, analog gNB and hybrid UE, N_SS 64",
                       "ia-delay", {{"nss", "64"}, {"scs", "240"}, {"arch", "analog,hybrid"}},
                       {array_pairs(), SweepAxis::single("tss", kBurstPeriods)}));
    out.push_back(make("fig11a_tracking_delay", "tracking delay, 64-element gNB, T_SS 20 ms", "tracking-delay",
                       {{"gnb", "64"}, {"tss", "20"}, {"scs", "120"}},
                       {SweepAxis::single("csi_option", {"1", "2"}), SweepAxis::single("csi_slots", {"5", "80"}),
                        SweepAxis::single("n_user", {"5", "10", "20"}),
                        SweepAxis::single("csi_rx", {"1", "2", "3", "4"})}));
    out.push_back(make("fig11b_tracking_delay_vs_tss", "tracking delay, 64-element gNB, CSI-RS every 5 slots",
                       "tracking-delay", {{"gnb", "64"}, {"csi_slots", "5"}, {"scs", "120"}},
                       {SweepAxis::single("csi_option", {"1", "2"}), SweepAxis::single("tss", {"10", "40"}),
                        SweepAxis::single("n_user", {"5", "10", "20"}),
                        SweepAxis::single("csi_rx", {"1", "2", "3", "4"})}));
    out.push_back(make("fig12_ia_delay_vs_scs", "IA delay against subcarrier spacing, analog beamforming",
                       "ia-delay", {{"nss", "64"}, {"tss", "20"}, {"arch", "analog,analog"}},
                       {SweepAxis::zipped({"gnb", "ue"}, {{"4", "4"}, {"64", "1"}}),
                        SweepAxis::single("scs", {"120", "240"})}));
    out.push_back(make("fig13a_ss_overhead_vs_nss", "SS burst overhead over 5 ms against N_SS", "overhead",
                       {{"tss", "20"}}, {spacing_diversity(), SweepAxis::single("nss", kBurstSizes)}));
    out.push_back(make("fig13b_ss_overhead_vs_tss", "SS burst overhead over T_SS, N_SS 64", "overhead",
                       {{"nss", "64"}}, {spacing_diversity(), SweepAxis::single("tss", kBurstPeriods)}));
    out.push_back(make("fig14_csi_count_vs_tss", "CSI-RS per burst period against T_SS", "neighbors",
                       {{"scs", "120"}},
                       {SweepAxis::single("csi_option", {"1", "2"}),
                        SweepAxis::single("csi_slots", {"10", "20", "40", "80"}),
                        SweepAxis::single("tss", kBurstPeriods)}));
    out.push_back(make("fig16a_csi_overhead", "CSI-RS overhead, T_SS 20 ms", "overhead",
                       {{"tss", "20"}, {"scs", "120"}, {"nss", "64"}},
                       {SweepAxis::single("csi_slots", {"40", "5"}), SweepAxis::single("csi_symbols", {"1", "2", "4"}),
                        SweepAxis::single("rho", kRhos)}));
    out.push_back(make("fig16b_total_overhead", "total overhead, N_SS 64, CSI-RS every 5 slots, T_SS 20 ms",
                       "overhead", {{"tss", "20"}, {"nss", "64"}, {"csi_slots", "5"}},
                       {spacing_diversity(), SweepAxis::single("csi_symbols", {"1", "2", "4"}),
                        SweepAxis::single("rho", kRhos)}));
    out.push_back(make("table07_report_delay", "SA beam reporting delay, T_SS 20 ms", "report-delay",
                       {{"tss", "20"}, {"scs", "120"}, {"ue", "4"}, {"framework", "sa"}},
                       {SweepAxis::single("gnb", {"4", "16", "64"}),
                        SweepAxis::single("arch", {"analog,analog", "digital,analog"}),
                        SweepAxis::single("nss", {"8", "64"})}));
    SweepAxis rlf_configs = SweepAxis::zipped(
        {"nss", "tss", "arch"}, {{"8", "20", "analog,analog"}, {"64", "40", "digital,analog"}, {"64", "80", "digital,analog"}});
    out.push_back(make("table08_rlf_delay", "SA radio link failure recovery delay", "rlf",
                       {{"scs", "120"}, {"framework", "sa"}},
                       {SweepAxis::zipped({"gnb", "ue"}, {{"4", "4"}, {"64", "1"}, {"64", "16"}}), rlf_configs}));
    out.push_back(make("table09_report_overhead", "SA beam reporting overhead, T_SS 20 ms", "overhead",
                       {{"tss", "20"}, {"scs", "120"}, {"nss", "64"}, {"framework", "sa"}},
                       {SweepAxis::single("gnb", {"4", "16", "64"}),
                        SweepAxis::single("arch", {"analog,analog", "digital,analog"}),
                        SweepAxis::single("rach_scs", {"60", "120"})}));
    return out;
}

}  // namespace

const std::vector<FigureSpec>& figure_catalog() {
    static const std::vector<FigureSpec> catalog = build_catalog();
    return catalog;
}

std::string render_figure(const FigureSpec& figure, unsigned threads) {
    const SweepResult result = run_sweep(figure.sweep, threads);
    std::ostringstream out;
    write_csv(out, result.header, result.rows);
    return out.str();
}

std::vector<FigureFile> write_figures(const std::filesystem::path& out_dir, unsigned threads) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError(fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));

    std::vector<FigureFile> written;
    for (const auto& fig : figure_catalog()) {
        const std::string text = render_figure(fig, threads);
        const auto path = out_dir / (fig.name + ".csv");
        std::ofstream out(path, std::ios::binary);
        out << text;
        out.close();
        if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
        const auto rows = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) - 1;
        written.push_back({path, rows});
    }
    return written;
}

}  // namespace nrbm
