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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace nrbm {

/// Exact duration in milliseconds.
///
/// Every timing quantity in the frame structure is a dyadic or decimal
/// fraction of a millisecond (slot = 1/2^n, symbol = 0.07135/2^n), so all
/// timing arithmetic is done on rationals and only converted to floating
/// point for display or for ratios that also involve a real-valued factor.
class Millis {
public:
    using rep = boost::rational<std::int64_t>;

    constexpr Millis() = default;
    explicit Millis(rep value) : value_(value) {}

    static Millis whole(std::int64_t ms) { return Millis(rep(ms)); }
    static Millis ratio(std::int64_t num, std::int64_t den) { return Millis(rep(num, den)); }

    /// Parses a plain decimal literal ("20", "0.625", "-1.5") exactly.
    /// Throws std::invalid_argument on anything else.
    static Millis parse(std::string_view text);

    [[nodiscard]] const rep& value() const { return value_; }
    [[nodiscard]] double to_double() const { return boost::rational_cast<double>(value_); }
    [[nodiscard]] bool is_zero() const { return value_.numerator() == 0; }

    /// Exact decimal when the value terminates in base 10, otherwise
    /// 10 significant digits.
    [[nodiscard]] std::string to_string() const;

    Millis& operator+=(const Millis& o) { value_ += o.value_; return *this; }
    Millis& operator-=(const Millis& o) { value_ -= o.value_; return *this; }

    friend Millis operator+(Millis a, const Millis& b) { return a += b; }
    friend Millis operator-(Millis a, const Millis& b) { return a -= b; }
    friend Millis operator*(const Millis& a, std::int64_t k) { return Millis(a.value_ * k); }
    friend Millis operator*(std::int64_t k, const Millis& a) { return Millis(a.value_ * k); }
    friend Millis operator/(const Millis& a, std::int64_t k) { return Millis(a.value_ / k); }
    /// Dimensionless ratio of two durations.
    friend rep operator/(const Millis& a, const Millis& b) { return a.value_ / b.value_; }

    friend bool operator==(const Millis& a, const Millis& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Millis& a, const Millis& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    rep value_{0};
};

/// floor(a / b) for positive b.
std::int64_t floor_div(const Millis& a, const Millis& b);
/// ceil(a / b) for positive b.
std::int64_t ceil_div(const Millis& a, const Millis& b);

/// Renders a rational exactly if it has a terminating decimal expansion,
/// otherwise with 10 significant digits.
std::string render_decimal(const Millis::rep& value);

}  // namespace nrbm
