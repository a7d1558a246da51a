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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nrbm/evaluate.hpp"
#include "nrbm/params.hpp"

namespace nrbm {

/// One grid dimension. Several keys on one axis vary together: each value
/// supplies one entry per key.
struct SweepAxis {
    std::vector<std::string> keys;
    std::vector<std::vector<std::string>> values;

    static SweepAxis single(std::string key, std::vector<std::string> values);
    static SweepAxis zipped(std::vector<std::string> keys, std::vector<std::vector<std::string>> values);

    /// Parses "key=v1,v2" or, for values containing commas, "key=v1;v2".
    /// Zipped keys are joined with '+', as are the entries of each value:
    /// "gnb+ue=4+4,64+16".
    static SweepAxis parse(std::string_view text);
};

struct SweepSpec {
    std::string metric;
    ParamSet fixed = ParamSet::defaults();
    std::vector<SweepAxis> axes;

    /// Cartesian product size; the last axis varies fastest.
    [[nodiscard]] std::size_t size() const;
    /// Fixed parameters with grid point `index` applied.
    [[nodiscard]] ParamSet point(std::size_t index) const;
    /// Axis keys in declaration order.
    [[nodiscard]] std::vector<std::string> axis_keys() const;
    /// Throws ValidationError for an unknown metric, an unknown key or an
    /// empty or ragged axis.
    void validate() const;
};

struct SweepResult {
    Cells header;
    std::vector<Cells> rows;  ///< in grid order
};

/// Worker count from NR_BEAMMGR_THREADS, else the hardware concurrency.
unsigned worker_count();

/// Evaluates every grid point. Rows come back in grid order whatever the
/// worker count. A failing point aborts the sweep with its error, prefixed
/// by the offending point.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads);

}  // namespace nrbm
