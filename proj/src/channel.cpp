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

#include "nrbm/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "nrbm/error.hpp"
#include "nrbm/simd/link_budget.hpp"

namespace nrbm {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: the i-th output of stream (seed, trial) is a
/// pure function of (seed, trial, i).
class TrialStream {
public:
    using result_type = std::uint64_t;

    TrialStream(std::uint64_t seed, std::uint64_t trial)
        : key_(splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// (0, 1]; keeps sqrt and log away from zero.
double open_unit(TrialStream& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

constexpr std::int64_t kTrialBlock = 1024;

}  // namespace

double DeploymentModel::mean_gnb_count() const {
    const double radius_km = region_radius_m / 1000.0;
    return gnb_density_per_km2 * std::numbers::pi * radius_km * radius_km;
}

void DeploymentModel::validate() const {
    if (!(gnb_density_per_km2 > 0.0)) {
        throw ValidationError("density", fmt::format("gNB density must be > 0, got {}", gnb_density_per_km2));
    }
    if (!(region_radius_m >= 200.0)) {
        throw ValidationError("region_radius", fmt::format("region radius must be >= 200 m, got {}", region_radius_m));
    }
    if (!std::isfinite(snr_threshold_db)) {
        throw ValidationError("snr_threshold", "threshold must be finite");
    }
    if (!std::isfinite(tx_power_dbm)) throw ValidationError("tx_power", "transmit power must be finite");
    if (!std::isfinite(noise_figure_db)) throw ValidationError("noise_figure", "noise figure must be finite");
    if (!(bandwidth_per_rep_hz > 0.0)) throw ValidationError("scs", "noise bandwidth must be positive");
}

void ChannelParams::validate() const {
    auto check = [](const PathlossModel& m, const char* prefix) {
        if (!(m.beta > 0.0)) {
            throw ValidationError(fmt::format("{}_beta", prefix), fmt::format("exponent must be > 0, got {}", m.beta));
        }
        if (!(m.shadow_sigma_db >= 0.0)) {
            throw ValidationError(fmt::format("{}_sigma", prefix),
                                  fmt::format("shadowing sigma must be >= 0, got {}", m.shadow_sigma_db));
        }
    };
    check(los, "los");
    check(nlos, "nlos");
    if (!(los_decay_m > 0.0)) throw ValidationError("los_decay", "LOS decay length must be > 0");
    if (!(outage_decay_m > 0.0)) throw ValidationError("outage_decay", "outage decay length must be > 0");
}

std::string_view to_string(LinkState state) {
    switch (state) {
        case LinkState::Los: return "los";
        case LinkState::Nlos: return "nlos";
        case LinkState::Outage: return "outage";
    }
    return "?";
}

StateProbabilities state_probabilities(const ChannelParams& params, double distance_m) {
    const double p_out = std::max(0.0, 1.0 - std::exp(-distance_m / params.outage_decay_m + params.outage_offset));
    const double p_los = (1.0 - p_out) * std::exp(-distance_m / params.los_decay_m);
    return {p_out, p_los, 1.0 - p_out - p_los};
}

std::vector<LinkSample> sample_deployment(const DeploymentModel& model, const ChannelParams& params,
                                          std::uint64_t seed, std::uint64_t trial_index) {
    TrialStream rng(seed, trial_index);
    std::poisson_distribution<std::int32_t> count_dist(model.mean_gnb_count());
    std::normal_distribution<double> shadow_dist(0.0, 1.0);
    const std::int32_t count = count_dist(rng);

    std::vector<LinkSample> links;
    links.reserve(static_cast<std::size_t>(count));
    for (std::int32_t k = 0; k < count; ++k) {
        // uniform in the disc
        const double distance = model.region_radius_m * std::sqrt(open_unit(rng));
        const StateProbabilities p = state_probabilities(params, distance);
        const double u = open_unit(rng);
        LinkState state = LinkState::Outage;
        if (u <= p.los) {
            state = LinkState::Los;
        } else if (u <= p.los + p.nlos) {
            state = LinkState::Nlos;
        }
        // drawn for every gNB so that stream positions do not depend on the state
        const double z = shadow_dist(rng);
        double shadow = 0.0;
        if (state == LinkState::Los) shadow = params.los.shadow_sigma_db * z;
        if (state == LinkState::Nlos) shadow = params.nlos.shadow_sigma_db * z;
        links.push_back({distance, state, shadow});
    }
    return links;
}

double pathloss_db(const ChannelParams& params, LinkState state, double distance_m, double shadowing_db) {
    if (!(distance_m > 0.0)) {
        throw std::invalid_argument(fmt::format("pathloss needs a positive distance, got {}", distance_m));
    }
    if (state == LinkState::Outage) return std::numeric_limits<double>::infinity();
    const PathlossModel& m = state == LinkState::Los ? params.los : params.nlos;
    return m.alpha_db + 10.0 * m.beta * std::log10(distance_m) + shadowing_db;
}

double noise_power_dbm(const DeploymentModel& model) {
    return -174.0 + 10.0 * std::log10(model.bandwidth_per_rep_hz) + model.noise_figure_db;
}

namespace {

double repetition_gain_db(std::int32_t n_rep) { return 5.0 * std::log10(static_cast<double>(n_rep)); }

double power_split_db(std::int32_t tx_kbf) { return 10.0 * std::log10(static_cast<double>(tx_kbf)); }

// Everything in the SNR except the pathloss.
double link_budget_db(const MisdetectionSetup& setup) {
    const bool downlink = setup.framework != FrameworkKind::NsaUl;
    const Transceiver& tx = downlink ? setup.gnb : setup.ue;
    const std::int32_t split = (tx.arch.kind == BfKind::Hybrid || tx.arch.kind == BfKind::Digital) ? tx.kbf : 1;
    DeploymentModel model = setup.model;
    model.bandwidth_per_rep_hz = kSsBlockSubcarriers * setup.burst.numerology.spacing_hz();
    return link_snr_db(model, setup.gnb.codebook.boresight_gain_dbi, setup.ue.codebook.boresight_gain_dbi, 0.0,
                       setup.burst.n_rep, split);
}

simd::PathlossCoeffs kernel_coeffs(const ChannelParams& p) {
    return {p.los.alpha_db, 10.0 * p.los.beta, p.nlos.alpha_db, 10.0 * p.nlos.beta};
}

std::int32_t state_code(LinkState s) {
    switch (s) {
        case LinkState::Los: return simd::kStateLos;
        case LinkState::Nlos: return simd::kStateNlos;
        case LinkState::Outage: return simd::kStateOutage;
    }
    return simd::kStateOutage;
}

/// Reusable lane buffers for one worker.
struct LaneScratch {
    std::vector<double> log10_distance;
    std::vector<double> shadow_db;
    std::vector<std::int32_t> state;
    std::vector<double> snr;

    void load(const std::vector<LinkSample>& links) {
        const std::size_t n = links.size();
        log10_distance.resize(n);
        shadow_db.resize(n);
        state.resize(n);
        snr.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            log10_distance[i] = std::log10(links[i].distance_m);
            shadow_db[i] = links[i].shadowing_db;
            state[i] = state_code(links[i].state);
        }
    }

    [[nodiscard]] simd::LinkLanes lanes() const { return {log10_distance, shadow_db, state}; }
};

TrialOutcome evaluate_trial(const MisdetectionSetup& setup, double budget, const simd::PathlossCoeffs& coeffs,
                            std::uint64_t seed, std::uint64_t trial_index, LaneScratch& scratch) {
    const auto links = sample_deployment(setup.model, setup.params, seed, trial_index);
    scratch.load(links);
    simd::link_snr_db(coeffs, budget, scratch.lanes(), scratch.snr);
    const double best = simd::max_value(scratch.snr);

    TrialOutcome out{best, best >= setup.model.snr_threshold_db, LinkState::Outage, 0.0};
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (scratch.snr[i] == best) {
            out.link_state = links[i].state;
            out.serving_distance_m = links[i].distance_m;
            break;
        }
    }
    return out;
}

}  // namespace

double link_snr_db(const DeploymentModel& model, double gain_tx_dbi, double gain_rx_dbi, double pathloss,
                   std::int32_t n_rep, std::int32_t tx_kbf) {
    if (n_rep < 1) throw std::invalid_argument(fmt::format("N_rep must be >= 1, got {}", n_rep));
    if (tx_kbf < 1) throw std::invalid_argument(fmt::format("K_BF must be >= 1, got {}", tx_kbf));
    return model.tx_power_dbm - power_split_db(tx_kbf) + gain_tx_dbi + gain_rx_dbi - pathloss -
           noise_power_dbm(model) + repetition_gain_db(n_rep);
}

TrialOutcome run_trial(const MisdetectionSetup& setup, std::uint64_t seed, std::uint64_t trial_index) {
    LaneScratch scratch;
    return evaluate_trial(setup, link_budget_db(setup), kernel_coeffs(setup.params), seed, trial_index, scratch);
}

MisdetectionEstimate misdetection_probability(const MisdetectionSetup& setup, std::int64_t trials,
                                              std::uint64_t seed, unsigned threads) {
    if (trials < kMinMisdetectionTrials) {
        throw ValidationError("trials", fmt::format("need at least {} trials, got {}", kMinMisdetectionTrials, trials));
    }
    setup.model.validate();
    setup.params.validate();
    setup.burst.validate();

    const double budget = link_budget_db(setup);
    const simd::PathlossCoeffs coeffs = kernel_coeffs(setup.params);
    const std::int64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::int64_t> misses(static_cast<std::size_t>(blocks), 0);
    std::atomic<std::int64_t> next_block{0};

    auto worker = [&] {
        LaneScratch scratch;
        for (std::int64_t b = next_block++; b < blocks; b = next_block++) {
            const std::int64_t begin = b * kTrialBlock;
            const std::int64_t end = std::min(trials, begin + kTrialBlock);
            std::int64_t count = 0;
            for (std::int64_t t = begin; t < end; ++t) {
                if (!evaluate_trial(setup, budget, coeffs, seed, static_cast<std::uint64_t>(t), scratch).detected) {
                    ++count;
                }
            }
            misses[static_cast<std::size_t>(b)] = count;
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    std::int64_t total = 0;
    for (const std::int64_t m : misses) total += m;
    const double p = static_cast<double>(total) / static_cast<double>(trials);
    const double halfwidth = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return {p, halfwidth, trials, total};
}

}  // namespace nrbm
