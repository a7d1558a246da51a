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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nrbm/params.hpp"

namespace nrbm {

using Cells = std::vector<std::string>;

/// One evaluable quantity: the parameters it reads and the columns it
/// produces. Output cells are rendered by the library so every consumer
/// writes identical text.
struct Metric {
    std::string name;
    std::string summary;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    bool stochastic = false;
    std::function<Cells(const ParamSet&, unsigned threads)> compute;
};

const std::vector<Metric>& metric_registry();
/// Throws ValidationError("metric", ...) for an unknown name.
const Metric& find_metric(std::string_view name);

/// Input columns followed by output columns.
Cells metric_header(const Metric& metric, const std::vector<std::string>& extra_inputs = {});

/// Echoed inputs followed by computed outputs. Throws ValidationError or
/// std::invalid_argument when the parameters do not admit the metric.
Cells metric_row(const Metric& metric, const ParamSet& params, unsigned threads = 1,
                 const std::vector<std::string>& extra_inputs = {});

}  // namespace nrbm
