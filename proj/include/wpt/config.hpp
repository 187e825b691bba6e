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

#ifndef WPT_CONFIG_HPP_
#define WPT_CONFIG_HPP_

// Minimal INI reader: "[section]" headers, "key = value" pairs, '#' or ';'
// comments. Every lookup is recorded so unknown keys can be reported with
// their line numbers.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wpt
{

class IniFile
{
public:
    struct Entry
    {
        std::string value;
        std::size_t line = 0;
    };

    static IniFile parse(const std::string &text, const std::string &source = "<string>");
    static IniFile load(const std::filesystem::path &path);

    bool has(const std::string &section, const std::string &key) const;

    std::optional<std::string> get_string(const std::string &section, const std::string &key) const;
    std::optional<double> get_double(const std::string &section, const std::string &key) const;
    std::optional<long long> get_int(const std::string &section, const std::string &key) const;
    std::optional<bool> get_bool(const std::string &section, const std::string &key) const;
    // Comma-separated list of integers.
    std::optional<std::vector<long long>> get_int_list(const std::string &section, const std::string &key) const;
    std::optional<std::vector<std::string>> get_string_list(const std::string &section, const std::string &key) const;

    // Throws ConfigError naming the first key that was never looked up.
    void reject_unused() const;

private:
    const Entry *find(const std::string &section, const std::string &key) const;
    [[noreturn]] void fail(const std::string &section, const std::string &key, const std::string &what) const;

    std::string source_;
    std::map<std::pair<std::string, std::string>, Entry> entries_;
    mutable std::set<std::pair<std::string, std::string>> used_;
};

} // namespace wpt

#endif
