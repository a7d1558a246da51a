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

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nrbm/beams.hpp"
#include "nrbm/ia.hpp"
#include "nrbm/numerology.hpp"

namespace nrbm {

/// Poisson deployment of gNBs around a UE plus the link-budget constants.
struct DeploymentModel {
    double gnb_density_per_km2 = 10.0;
    double region_radius_m = 500.0;
    double tx_power_dbm = 30.0;
    double carrier_ghz = 28.0;
    double snr_threshold_db = -5.0;
    double noise_figure_db = 7.0;
    /// Noise bandwidth of one SS-block chunk, 240 * Δf.
    double bandwidth_per_rep_hz = 240.0 * 120e3;

    [[nodiscard]] double mean_gnb_count() const;
    void validate() const;
};

struct PathlossModel {
    double alpha_db;
    double beta;
    double shadow_sigma_db;
};

/// 28 GHz dense-urban LOS/NLOS/outage channel.
struct ChannelParams {
    PathlossModel los{61.4, 2.0, 5.8};
    PathlossModel nlos{72.0, 2.92, 8.7};
    double los_decay_m = 67.1;
    double outage_decay_m = 30.0;
    double outage_offset = 5.2;

    void validate() const;
};

enum class LinkState { Los, Nlos, Outage };

std::string_view to_string(LinkState state);

struct StateProbabilities {
    double outage;
    double los;
    double nlos;
};

/// p_out = max(0, 1 - exp(-d/a_out + b_out)), p_LOS = (1 - p_out) exp(-d/a_LOS).
StateProbabilities state_probabilities(const ChannelParams& params, double distance_m);

struct LinkSample {
    double distance_m;
    LinkState state;
    double shadowing_db;
};

/// One deployment realisation; deterministic in (seed, trial_index).
std::vector<LinkSample> sample_deployment(const DeploymentModel& model, const ChannelParams& params,
                                          std::uint64_t seed, std::uint64_t trial_index);

/// alpha + 10 beta log10(d) + shadowing; +infinity for an outage link.
double pathloss_db(const ChannelParams& params, LinkState state, double distance_m, double shadowing_db = 0.0);

/// Thermal noise over the SS-block chunk: -174 + 10 log10(240 Δf) + NF.
double noise_power_dbm(const DeploymentModel& model);

/// SNR of one beam pair. Transmit power is split across tx_kbf
/// simultaneous beams, and N_rep repetitions add 5 log10(N_rep) dB.
double link_snr_db(const DeploymentModel& model, double gain_tx_dbi, double gain_rx_dbi, double pathloss,
                   std::int32_t n_rep, std::int32_t tx_kbf = 1);

struct TrialOutcome {
    double best_snr_db;
    bool detected;
    LinkState link_state;
    double serving_distance_m;  ///< 0 when no gNB was sampled
};

/// Who transmits the swept reference signal and what both ends look like.
struct MisdetectionSetup {
    DeploymentModel model;
    ChannelParams params;
    Transceiver gnb = Transceiver::gnb(4, BfArchitecture::analog());
    Transceiver ue = Transceiver::ue(4, BfArchitecture::analog());
    SsBurstConfig burst;
    FrameworkKind framework = FrameworkKind::SaDl;
};

TrialOutcome run_trial(const MisdetectionSetup& setup, std::uint64_t seed, std::uint64_t trial_index);

struct MisdetectionEstimate {
    double estimate;
    double confidence_halfwidth;  ///< Wald 95%
    std::int64_t trials;
    std::int64_t misdetections;
};

inline constexpr std::int64_t kMinMisdetectionTrials = 1000;

/// Fraction of trials whose best gNB falls below the SNR threshold.
/// The result depends only on (setup, trials, seed), never on `threads`.
MisdetectionEstimate misdetection_probability(const MisdetectionSetup& setup, std::int64_t trials,
                                              std::uint64_t seed, unsigned threads = 1);

}  // namespace nrbm
