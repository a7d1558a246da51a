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

#include <filesystem>
#include <string>
#include <vector>

#include "nrbm/sweep.hpp"

namespace nrbm {

/// A reproducible data series: one sweep written to `<name>.csv`.
struct FigureSpec {
    std::string name;
    std::string title;
    SweepSpec sweep;
};

/// The analytic figures and tables, in output order.
const std::vector<FigureSpec>& figure_catalog();

/// CSV text of one figure.
std::string render_figure(const FigureSpec& figure, unsigned threads);

struct FigureFile {
    std::filesystem::path path;
    std::size_t rows;
};

/// Writes every catalog entry into `out_dir` (created if missing).
/// Throws IoError when a file cannot be written.
std::vector<FigureFile> write_figures(const std::filesystem::path& out_dir, unsigned threads);

}  // namespace nrbm
