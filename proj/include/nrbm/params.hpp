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
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nrbm/beams.hpp"
#include "nrbm/channel.hpp"
#include "nrbm/duration.hpp"
#include "nrbm/ia.hpp"
#include "nrbm/numerology.hpp"
#include "nrbm/tracking.hpp"

namespace nrbm {

/// Config file could not be read or output could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParamSpec {
    std::string key;
    std::string section;
    std::string default_value;  ///< empty means "unset"
    std::string help;
};

/// Every recognised parameter, in the order used for CSV columns.
const std::vector<ParamSpec>& parameter_registry();
const ParamSpec* find_param(std::string_view key);

/// Flat key -> text map over the registry. Values stay textual so they can
/// be echoed verbatim into output rows.
class ParamSet {
public:
    static ParamSet defaults();

    /// Throws ValidationError for an unknown key.
    void set(const std::string& key, std::string value);
    [[nodiscard]] const std::string& get(const std::string& key) const;
    [[nodiscard]] bool is_set(const std::string& key) const { return !get(key).empty(); }

    [[nodiscard]] std::int64_t get_int(const std::string& key) const;
    [[nodiscard]] double get_double(const std::string& key) const;
    [[nodiscard]] Millis get_millis(const std::string& key) const;
    [[nodiscard]] bool get_bool(const std::string& key) const;

    /// Reads an INI-style file ("[section]" headers, "key = value" lines,
    /// '#' or ';' comments). A key placed under the wrong section is a
    /// validation error; an unreadable file is an IoError.
    void load_file(const std::filesystem::path& path);
    void load_string(const std::string& text);

    [[nodiscard]] const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Renders the registry defaults as a commented config file.
std::string default_config_text();

struct Violation {
    std::string field;
    std::string message;
};

/// Every constraint the parameter set breaks; empty when valid.
std::vector<Violation> validate(const ParamSet& params);

// Domain objects built from a parameter set. Each throws ValidationError
// naming the first offending field.
SsBurstConfig build_burst(const ParamSet& params);
std::pair<BfArchitecture, BfArchitecture> build_architectures(const ParamSet& params);
Transceiver build_gnb(const ParamSet& params);
Transceiver build_ue(const ParamSet& params);
FrameworkConfig build_framework(const ParamSet& params);
CsiRsConfig build_csi(const ParamSet& params);
DeploymentModel build_deployment(const ParamSet& params);
ChannelParams build_channel(const ParamSet& params);
MisdetectionSetup build_misdetection(const ParamSet& params);

}  // namespace nrbm
