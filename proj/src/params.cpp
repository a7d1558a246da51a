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

#include "nrbm/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

const std::vector<ParamSpec>& parameter_registry() {
    static const std::vector<ParamSpec> registry = {
        {"scs", "numerology", "120", "subcarrier spacing in kHz (120 or 240)"},

        {"nss", "burst", "64", "SS blocks per burst N_SS (8, 16, 32, 64)"},
        {"tss", "burst", "20", "SS burst periodicity T_SS in ms (5, 10, 20, 40, 80, 160)"},
        {"diversity", "burst", "off", "frequency repetition of SS blocks (on/off)"},
        {"bandwidth_mhz", "burst", "400", "carrier bandwidth B in MHz"},

        {"gnb", "beams", "64", "gNB antenna elements M_gNB"},
        {"ue", "beams", "16", "UE antenna elements M_UE (1 = omnidirectional)"},
        {"arch", "beams", "analog,analog", "beamforming architecture gNB,UE (analog|hybrid|digital|omni)"},
        {"hybrid_nu", "beams", "2", "hybrid beamforming divisor nu"},

        {"framework", "framework", "sa", "beam management framework (sa | nsa-dl | nsa-ul)"},
        {"lte_latency", "framework", "4", "LTE overlay latency in ms for NSA frameworks"},
        {"srs_period", "framework", "", "SRS periodicity T_SRS in ms (unset = no SRS)"},
        {"srs_miss", "framework", "", "missed SRS before RLF is declared N_SRS (unset = no SRS)"},
        {"rlf_detection", "framework", "auto", "NSA RLF detection (auto | ue | srs)"},
        {"search_wait", "framework", "off", "add the expected T_SS/2 cell-search wait to IA latency (on/off)"},

        {"csi_option", "tracking", "2", "CSI-RS scheduling option (1 or 2)"},
        {"csi_slots", "tracking", "5", "CSI-RS periodicity in slots (5 .. 640)"},
        {"csi_symbols", "tracking", "1", "OFDM symbols per CSI-RS (1, 2, 4)"},
        {"rho", "tracking", "0.072", "fraction of B used by a CSI-RS"},
        {"n_user", "tracking", "5", "users per gNB sector"},
        {"csi_rx", "tracking", "1", "directions each UE monitors N_CSI,RX (1..4)"},

        {"rach_scs", "overhead", "120", "RACH subcarrier spacing in kHz (60 or 120)"},

        {"density", "channel", "10", "gNB density in gNB/km^2"},
        {"region_radius", "channel", "500", "simulation disc radius in m"},
        {"tx_power", "channel", "30", "transmit power in dBm"},
        {"carrier_ghz", "channel", "28", "carrier frequency in GHz"},
        {"snr_threshold", "channel", "-5", "detection SNR threshold in dB"},
        {"noise_figure", "channel", "7", "receiver noise figure in dB"},
        {"los_alpha", "channel", "61.4", "LOS pathloss intercept in dB"},
        {"los_beta", "channel", "2", "LOS pathloss exponent"},
        {"los_sigma", "channel", "5.8", "LOS shadowing std-dev in dB"},
        {"nlos_alpha", "channel", "72", "NLOS pathloss intercept in dB"},
        {"nlos_beta", "channel", "2.92", "NLOS pathloss exponent"},
        {"nlos_sigma", "channel", "8.7", "NLOS shadowing std-dev in dB"},
        {"los_decay", "channel", "67.1", "LOS probability decay length in m"},
        {"outage_decay", "channel", "30", "outage probability decay length in m"},
        {"outage_offset", "channel", "5.2", "outage probability offset"},

        {"trials", "montecarlo", "100000", "Monte Carlo trials per point"},
        {"seed", "montecarlo", "1", "Monte Carlo seed"},
    };
    return registry;
}

const ParamSpec* find_param(std::string_view key) {
    for (const auto& spec : parameter_registry()) {
        if (spec.key == key) return &spec;
    }
    return nullptr;
}

ParamSet ParamSet::defaults() {
    ParamSet ps;
    for (const auto& spec : parameter_registry()) ps.values_[spec.key] = spec.default_value;
    return ps;
}

void ParamSet::set(const std::string& key, std::string value) {
    if (find_param(key) == nullptr) {
        throw ValidationError(key, "unknown parameter");
    }
    values_[key] = std::move(value);
}

const std::string& ParamSet::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ValidationError(key, "unknown parameter");
    return it->second;
}

std::int64_t ParamSet::get_int(const std::string& key) const {
    const std::string& text = get(key);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError(key, fmt::format("expected an integer, got '{}'", text));
    }
    return value;
}

double ParamSet::get_double(const std::string& key) const {
    const std::string& text = get(key);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError(key, fmt::format("expected a number, got '{}'", text));
    }
    return value;
}

Millis ParamSet::get_millis(const std::string& key) const {
    try {
        return Millis::parse(get(key));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw ValidationError(key, fmt::format("expected a decimal duration in ms, got '{}'", get(key)));
    }
}

bool ParamSet::get_bool(const std::string& key) const {
    const std::string& text = get(key);
    if (text == "on" || text == "1" || text == "true" || text == "yes") return true;
    if (text == "off" || text == "0" || text == "false" || text == "no") return false;
    throw ValidationError(key, fmt::format("expected on/off, got '{}'", text));
}

namespace {

void apply_tree(ParamSet& ps, const boost::property_tree::ptree& tree) {
    for (const auto& [name, node] : tree) {
        if (node.empty()) {
            ps.set(name, node.data());
            continue;
        }
        for (const auto& [key, leaf] : node) {
            const ParamSpec* spec = find_param(key);
            if (spec == nullptr) throw ValidationError(key, fmt::format("unknown parameter in section [{}]", name));
            if (spec->section != name) {
                throw ValidationError(key, fmt::format("belongs in section [{}], found in [{}]", spec->section, name));
            }
            ps.set(key, leaf.data());
        }
    }
}

}  // namespace

void ParamSet::load_string(const std::string& text) {
    std::istringstream raw(text);
    std::string cleaned;
    for (std::string line; std::getline(raw, line);) {
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') line.clear();
        cleaned += line;
        cleaned += '\n';
    }
    std::istringstream in(cleaned);
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ValidationError("config", e.message());
    }
    apply_tree(*this, tree);
}

void ParamSet::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot read config file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(fmt::format("error reading config file '{}'", path.string()));
    load_string(buf.str());
}

std::string default_config_text() {
    std::string out = "; nr-beammgr configuration. Every key can be overridden with --key value.\n";
    std::string section;
    for (const auto& spec : parameter_registry()) {
        if (spec.section != section) {
            section = spec.section;
            out += fmt::format("\n[{}]\n", section);
        }
        out += fmt::format("; {}\n", spec.help);
        if (spec.default_value.empty()) {
            out += fmt::format("; {} =\n", spec.key);
        } else {
            out += fmt::format("{} = {}\n", spec.key, spec.default_value);
        }
    }
    return out;
}

// --- builders -------------------------------------------------------------

namespace {

std::int32_t get_i32(const ParamSet& ps, const std::string& key) {
    const std::int64_t v = ps.get_int(key);
    if (v < INT32_MIN || v > INT32_MAX) throw ValidationError(key, "value out of range");
    return static_cast<std::int32_t>(v);
}

std::pair<std::string, std::string> split_arch(const std::string& text) {
    const auto pos = text.find_first_of(",:");
    if (pos == std::string::npos) {
        throw ValidationError("arch", fmt::format("expected 'gnb,ue' architecture pair, got '{}'", text));
    }
    return {text.substr(0, pos), text.substr(pos + 1)};
}

template <typename Fn>
Transceiver rename_elements(const std::string& field, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        if (e.field() != "elements") throw;
        std::string msg = e.what();
        msg.erase(0, e.field().size() + 2);
        throw ValidationError(field, msg);
    }
}

}  // namespace

SsBurstConfig build_burst(const ParamSet& ps) {
    const std::int32_t scs = get_i32(ps, "scs");
    if (!is_beam_management_spacing(scs)) {
        throw ValidationError("scs", fmt::format("subcarrier spacing must be 120 or 240 kHz, got {}", scs));
    }
    const Millis t_ss = ps.get_millis("tss");
    if (t_ss.value().denominator() != 1) {
        throw ValidationError("tss", "T_SS must be in {5,10,20,40,80,160}");
    }
    const double bandwidth_mhz = ps.get_double("bandwidth_mhz");
    return SsBurstConfig::make(get_i32(ps, "nss"), t_ss.value().numerator(), scs, ps.get_bool("diversity"),
                               bandwidth_mhz * 1e6);
}

std::pair<BfArchitecture, BfArchitecture> build_architectures(const ParamSet& ps) {
    const auto [gnb_text, ue_text] = split_arch(ps.get("arch"));
    const std::int32_t nu = get_i32(ps, "hybrid_nu");
    if (nu < 2) throw ValidationError("hybrid_nu", fmt::format("hybrid divisor must be >= 2, got {}", nu));
    return {BfArchitecture{parse_bf_kind(gnb_text), nu}, BfArchitecture{parse_bf_kind(ue_text), nu}};
}

Transceiver build_gnb(const ParamSet& ps) {
    const std::int32_t m = get_i32(ps, "gnb");
    if (m < 1) throw ValidationError("gnb", fmt::format("gNB needs at least one element, got {}", m));
    const auto arch = build_architectures(ps).first;
    if (arch.kind == BfKind::Omni) throw ValidationError("arch", "the gNB cannot be omnidirectional");
    return rename_elements("gnb", [&] { return Transceiver::gnb(m, arch); });
}

Transceiver build_ue(const ParamSet& ps) {
    const std::int32_t m = get_i32(ps, "ue");
    if (m < 1) throw ValidationError("ue", fmt::format("UE needs at least one element, got {}", m));
    const auto arch = build_architectures(ps).second;
    if (arch.kind == BfKind::Omni && m != 1) {
        throw ValidationError("arch", "an omnidirectional UE must have ue = 1");
    }
    return rename_elements("ue", [&] { return Transceiver::ue(m, arch); });
}

FrameworkConfig build_framework(const ParamSet& ps) {
    FrameworkConfig fw;
    fw.kind = parse_framework(ps.get("framework"));
    fw.rlf_detection = parse_rlf_detection(ps.get("rlf_detection"));
    if (ps.is_set("lte_latency")) fw.lte_latency = ps.get_millis("lte_latency");
    if (ps.is_set("srs_period")) fw.srs_period = ps.get_millis("srs_period");
    if (ps.is_set("srs_miss")) fw.srs_miss_count = get_i32(ps, "srs_miss");
    fw.validate();
    return fw;
}

CsiRsConfig build_csi(const ParamSet& ps) {
    CsiRsConfig csi;
    csi.option = parse_csi_option(ps.get("csi_option"));
    csi.t_csi_slots = get_i32(ps, "csi_slots");
    csi.n_symb = get_i32(ps, "csi_symbols");
    csi.rho = ps.get_double("rho");
    csi.n_csi_rx = get_i32(ps, "csi_rx");
    csi.validate(build_burst(ps));
    return csi;
}

DeploymentModel build_deployment(const ParamSet& ps) {
    DeploymentModel m;
    m.gnb_density_per_km2 = ps.get_double("density");
    m.region_radius_m = ps.get_double("region_radius");
    m.tx_power_dbm = ps.get_double("tx_power");
    m.carrier_ghz = ps.get_double("carrier_ghz");
    m.snr_threshold_db = ps.get_double("snr_threshold");
    m.noise_figure_db = ps.get_double("noise_figure");
    m.bandwidth_per_rep_hz = kSsBlockSubcarriers * get_i32(ps, "scs") * 1e3;
    m.validate();
    return m;
}

ChannelParams build_channel(const ParamSet& ps) {
    ChannelParams c;
    c.los = {ps.get_double("los_alpha"), ps.get_double("los_beta"), ps.get_double("los_sigma")};
    c.nlos = {ps.get_double("nlos_alpha"), ps.get_double("nlos_beta"), ps.get_double("nlos_sigma")};
    c.los_decay_m = ps.get_double("los_decay");
    c.outage_decay_m = ps.get_double("outage_decay");
    c.outage_offset = ps.get_double("outage_offset");
    c.validate();
    return c;
}

MisdetectionSetup build_misdetection(const ParamSet& ps) {
    MisdetectionSetup s;
    s.model = build_deployment(ps);
    s.params = build_channel(ps);
    s.gnb = build_gnb(ps);
    s.ue = build_ue(ps);
    s.burst = build_burst(ps);
    s.framework = parse_framework(ps.get("framework"));
    return s;
}

// --- validation -----------------------------------------------------------

namespace {

template <typename T>
bool in_set(T v, std::initializer_list<T> set) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace

std::vector<Violation> validate(const ParamSet& ps) {
    std::vector<Violation> out;
    auto check = [&](const std::string& field, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const ValidationError& e) {
            std::string msg = e.what();
            const std::string prefix = e.field() + ": ";
            if (msg.starts_with(prefix)) msg.erase(0, prefix.size());
            out.push_back({e.field(), msg});
        } catch (const std::exception& e) {
            out.push_back({field, e.what()});
        }
    };
    auto fail = [](const std::string& field, const std::string& msg) { throw ValidationError(field, msg); };

    check("scs", [&] {
        if (!in_set<std::int64_t>(ps.get_int("scs"), {120, 240})) fail("scs", "subcarrier spacing must be in {120,240}");
    });
    check("nss", [&] {
        if (!in_set<std::int64_t>(ps.get_int("nss"), {8, 16, 32, 64})) fail("nss", "N_SS must be in {8,16,32,64}");
    });
    check("tss", [&] {
        const Millis t = ps.get_millis("tss");
        const bool ok = t.value().denominator() == 1 && in_set<std::int64_t>(t.value().numerator(), {5, 10, 20, 40, 80, 160});
        if (!ok) fail("tss", "T_SS must be in {5,10,20,40,80,160}");
    });
    check("diversity", [&] { (void)ps.get_bool("diversity"); });
    check("bandwidth_mhz", [&] { (void)build_burst(ps); });
    check("arch", [&] { (void)build_architectures(ps); });
    check("gnb", [&] { (void)build_gnb(ps); });
    check("ue", [&] { (void)build_ue(ps); });
    check("framework", [&] { (void)parse_framework(ps.get("framework")); });
    check("rlf_detection", [&] { (void)parse_rlf_detection(ps.get("rlf_detection")); });
    check("search_wait", [&] { (void)ps.get_bool("search_wait"); });
    check("lte_latency", [&] {
        if (ps.is_set("lte_latency") && ps.get_millis("lte_latency") <= Millis{}) fail("lte_latency", "must be positive");
        if (!ps.is_set("lte_latency") && ps.get("framework") != "sa") fail("lte_latency", "required for NSA frameworks");
    });
    check("srs_period", [&] {
        if (ps.is_set("srs_period") && ps.get_millis("srs_period") <= Millis{}) fail("srs_period", "must be positive");
    });
    check("srs_miss", [&] {
        if (ps.is_set("srs_miss") && ps.get_int("srs_miss") < 1) fail("srs_miss", "must be >= 1");
    });
    check("csi_option", [&] { (void)parse_csi_option(ps.get("csi_option")); });
    check("csi_slots", [&] {
        if (!in_set<std::int64_t>(ps.get_int("csi_slots"), {5, 10, 20, 40, 80, 160, 320, 640})) {
            fail("csi_slots", "T_CSI,slot must be in {5,10,20,40,80,160,320,640}");
        }
    });
    check("csi_symbols", [&] {
        if (!in_set<std::int64_t>(ps.get_int("csi_symbols"), {1, 2, 4})) fail("csi_symbols", "N_symb,CSI must be in {1,2,4}");
    });
    check("rho", [&] {
        const double rho = ps.get_double("rho");
        if (!(rho > 0.0 && rho <= 1.0)) fail("rho", "ρ ∈ (0,1]");
        const double scs_hz = static_cast<double>(ps.get_int("scs")) * 1e3;
        if (rho * ps.get_double("bandwidth_mhz") * 1e6 < 12.0 * scs_hz) fail("rho", "ρB must cover one resource block");
    });
    check("n_user", [&] {
        if (ps.get_int("n_user") < 1) fail("n_user", "must be >= 1");
    });
    check("csi_rx", [&] {
        const auto v = ps.get_int("csi_rx");
        if (v < 1 || v > 4) fail("csi_rx", "N_CSI,RX must be in 1..4");
    });
    check("rach_scs", [&] {
        if (!in_set<std::int64_t>(ps.get_int("rach_scs"), {60, 120})) fail("rach_scs", "RACH spacing must be in {60,120}");
    });
    check("density", [&] { (void)build_deployment(ps); });
    check("channel", [&] { (void)build_channel(ps); });
    check("trials", [&] {
        if (ps.get_int("trials") < kMinMisdetectionTrials) {
            fail("trials", fmt::format("must be >= {}", kMinMisdetectionTrials));
        }
    });
    check("seed", [&] {
        if (ps.get_int("seed") < 0) fail("seed", "must be >= 0");
    });

    // Builders re-report fields already checked individually; keep the first.
    std::vector<Violation> unique;
    for (auto& v : out) {
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](const Violation& u) {
            return u.field == v.field;
        });
        if (!dup) unique.push_back(std::move(v));
    }
    return unique;
}

}  // namespace nrbm
