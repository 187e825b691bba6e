// SPDX-License-Identifier: Apache-2.0
//
// wptsim - closed-loop wireless power transfer simulator
// Copyright (C) 2026 The wptsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WPT_TEXTIO_HPP_
#define WPT_TEXTIO_HPP_

// Small helpers shared by the text file formats.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpt::textio
{

// Shortest decimal string that parses back to exactly `v`.
std::string format_exact(double v);

// printf-style "%.<digits>g"
std::string format_sig(double v, int digits = 6);

// printf-style "%.<decimals>f"
std::string format_fixed(double v, int decimals);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

// Splits on runs of whitespace.
std::vector<std::string_view> split_ws(std::string_view line);
// Splits on a single delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view line, char delim);

std::string_view trim(std::string_view s);

} // namespace wpt::textio

#endif
