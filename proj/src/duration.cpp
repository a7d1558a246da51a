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

#include "nrbm/duration.hpp"

#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

namespace nrbm {

Millis Millis::parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument(fmt::format("not a decimal duration: '{}'", text)); };
    if (text.empty()) throw fail();

    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        ++pos;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.') {
            if (seen_point) throw fail();
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
        if (num > (INT64_MAX - 9) / 10 || (seen_point && den > INT64_MAX / 10)) throw fail();
        num = num * 10 + (c - '0');
        if (seen_point) den *= 10;
        seen_digit = true;
    }
    if (!seen_digit) throw fail();
    return Millis(rep(negative ? -num : num, den));
}

std::string Millis::to_string() const { return render_decimal(value_); }

std::int64_t floor_div(const Millis& a, const Millis& b) {
    const auto q = a / b;
    std::int64_t f = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --f;
    return f;
}

std::int64_t ceil_div(const Millis& a, const Millis& b) {
    const auto q = a / b;
    std::int64_t c = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() > 0) ++c;
    return c;
}

namespace {
__extension__ typedef __int128 wide_int;
}  // namespace

std::string render_decimal(const Millis::rep& value) {
    std::int64_t den = value.denominator();
    int twos = 0;
    int fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    const int digits = std::max(twos, fives);
    if (den != 1 || digits > 18) {
        return fmt::format("{:.10g}", boost::rational_cast<double>(value));
    }

    // Scale to an integer number of 10^-digits units.
    wide_int scaled = value.numerator();
    std::int64_t scale_den = value.denominator();
    wide_int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    scaled = scaled * (pow10 / scale_den);

    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    const auto int_part = static_cast<std::uint64_t>(scaled / pow10);
    auto frac_part = static_cast<std::uint64_t>(scaled % pow10);

    std::string out = negative ? "-" : "";
    out += std::to_string(int_part);
    if (digits > 0) {
        std::string frac = fmt::format("{:0{}}", frac_part, digits);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

}  // namespace nrbm
