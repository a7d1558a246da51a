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

#include "nrbm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "nrbm/error.hpp"

namespace nrbm {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

SweepAxis SweepAxis::single(std::string key, std::vector<std::string> values) {
    SweepAxis axis;
    axis.keys = {std::move(key)};
    for (auto& v : values) axis.values.push_back({std::move(v)});
    return axis;
}

SweepAxis SweepAxis::zipped(std::vector<std::string> keys, std::vector<std::vector<std::string>> values) {
    return SweepAxis{std::move(keys), std::move(values)};
}

SweepAxis SweepAxis::parse(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ValidationError("axis", fmt::format("expected key=v1,v2,..., got '{}'", text));
    }
    SweepAxis axis;
    axis.keys = split(text.substr(0, eq), '+');
    const std::string_view rest = text.substr(eq + 1);
    const char sep = rest.find(';') != std::string_view::npos ? ';' : ',';
    for (const auto& item : split(rest, sep)) {
        auto entries = axis.keys.size() == 1 ? std::vector<std::string>{item} : split(item, '+');
        axis.values.push_back(std::move(entries));
    }
    return axis;
}

std::size_t SweepSpec::size() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.values.size();
    return n;
}

ParamSet SweepSpec::point(std::size_t index) const {
    ParamSet ps = fixed;
    for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
        const std::size_t count = it->values.size();
        const auto& value = it->values[index % count];
        index /= count;
        for (std::size_t k = 0; k < it->keys.size(); ++k) ps.set(it->keys[k], value[k]);
    }
    return ps;
}

std::vector<std::string> SweepSpec::axis_keys() const {
    std::vector<std::string> keys;
    for (const auto& a : axes) keys.insert(keys.end(), a.keys.begin(), a.keys.end());
    return keys;
}

void SweepSpec::validate() const {
    (void)find_metric(metric);
    std::vector<std::string> seen;
    for (const auto& a : axes) {
        for (const auto& key : a.keys) {
            if (find_param(key) == nullptr) throw ValidationError(key, "unknown sweep axis parameter");
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
                throw ValidationError(key, "parameter appears on more than one axis");
            }
            seen.push_back(key);
        }
        if (a.values.empty()) throw ValidationError(a.keys.front(), "sweep axis has no values");
        for (const auto& v : a.values) {
            if (v.size() != a.keys.size()) {
                throw ValidationError(a.keys.front(), fmt::format("axis value has {} entries for {} keys", v.size(),
                                                                  a.keys.size()));
            }
        }
    }
}

unsigned worker_count() {
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NR_BEAMMGR_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
    }
    return hw;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    const Metric& metric = find_metric(spec.metric);
    const std::vector<std::string> extra = spec.axis_keys();
    const std::size_t n = spec.size();
    threads = std::max(1U, threads);

    SweepResult result;
    result.header = metric_header(metric, extra);
    result.rows.resize(n);

    // Small grids give the workers to each point instead; results do not
    // depend on either split.
    const unsigned outer = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    const unsigned inner = outer <= 1 ? threads : 1;

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = n;
    std::exception_ptr error;

    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                result.rows[i] = metric_row(metric, spec.point(i), inner, extra);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };
    if (outer <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < outer; ++t) pool.emplace_back(work);
    }

    if (error) {
        const ParamSet bad = spec.point(error_index);
        std::string where;
        for (const auto& key : extra) where += fmt::format("{}{}={}", where.empty() ? "" : " ", key, bad.get(key));
        try {
            std::rethrow_exception(error);
        } catch (const ValidationError& e) {
            throw ValidationError(e.field(), fmt::format("{} (grid point {}: {})",
                                                         std::string(e.what()).substr(e.field().size() + 2),
                                                         error_index, where));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(fmt::format("{} (grid point {}: {})", e.what(), error_index, where));
        }
    }
    return result;
}

}  // namespace nrbm
