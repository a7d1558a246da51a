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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nrbm/duration.hpp"

namespace nrbm {

/// 10 significant digits, '.' separator, no grouping.
std::string format_number(double value);
std::string format_count(std::int64_t value);
/// Exact when the decimal expansion terminates.
std::string format_duration(const Millis& value);

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Splits one CSV record, honouring quoted fields.
std::vector<std::string> csv_split(std::string_view line);

}  // namespace nrbm
