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

#include "wpt/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "wpt/errors.hpp"
#include "wpt/textio.hpp"

namespace wpt
{

IniFile IniFile::parse(const std::string &text, const std::string &source)
{
    IniFile ini;
    ini.source_ = source;
    std::istringstream in(text);
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        std::string_view v = line;
        const auto hash = v.find_first_of("#;");
        if (hash != std::string_view::npos)
            v = v.substr(0, hash);
        v = textio::trim(v);
        if (v.empty())
            continue;
        if (v.front() == '[')
        {
            if (v.back() != ']' || v.size() < 3)
                throw ConfigError(source + ":" + std::to_string(lineno) + ": malformed section header");
            section = std::string(textio::trim(v.substr(1, v.size() - 2)));
            continue;
        }
        const auto eq = v.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key(textio::trim(v.substr(0, eq)));
        const std::string value(textio::trim(v.substr(eq + 1)));
        if (key.empty())
            throw ConfigError(source + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError(source + ":" + std::to_string(lineno) + ": key '" + key + "' outside any section");
        if (!ini.entries_.emplace(std::make_pair(section, key), Entry{value, lineno}).second)
            throw ConfigError(source + ":" + std::to_string(lineno) + ": duplicate key [" + section + "] " + key);
    }
    return ini;
}

IniFile IniFile::load(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

const IniFile::Entry *IniFile::find(const std::string &section, const std::string &key) const
{
    used_.emplace(section, key);
    const auto it = entries_.find({section, key});
    return it == entries_.end() ? nullptr : &it->second;
}

bool IniFile::has(const std::string &section, const std::string &key) const
{
    return entries_.count({section, key}) != 0;
}

void IniFile::fail(const std::string &section, const std::string &key, const std::string &what) const
{
    const auto it = entries_.find({section, key});
    const std::string where = it == entries_.end() ? source_ : source_ + ":" + std::to_string(it->second.line);
    throw ConfigError(where + ": [" + section + "] " + key + ": " + what);
}

std::optional<std::string> IniFile::get_string(const std::string &section, const std::string &key) const
{
    const Entry *e = find(section, key);
    if (!e)
        return std::nullopt;
    return e->value;
}

std::optional<double> IniFile::get_double(const std::string &section, const std::string &key) const
{
    const Entry *e = find(section, key);
    if (!e)
        return std::nullopt;
    const auto v = textio::parse_double(e->value);
    if (!v)
        fail(section, key, "expected a number, got '" + e->value + "'");
    return v;
}

std::optional<long long> IniFile::get_int(const std::string &section, const std::string &key) const
{
    const Entry *e = find(section, key);
    if (!e)
        return std::nullopt;
    const auto v = textio::parse_int(e->value);
    if (!v)
        fail(section, key, "expected an integer, got '" + e->value + "'");
    return v;
}

std::optional<bool> IniFile::get_bool(const std::string &section, const std::string &key) const
{
    const Entry *e = find(section, key);
    if (!e)
        return std::nullopt;
    std::string v = e->value;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true" || v == "yes" || v == "on" || v == "1")
        return true;
    if (v == "false" || v == "no" || v == "off" || v == "0")
        return false;
    fail(section, key, "expected a boolean, got '" + e->value + "'");
}

std::optional<std::vector<std::string>> IniFile::get_string_list(const std::string &section,
                                                                 const std::string &key) const
{
    const Entry *e = find(section, key);
    if (!e)
        return std::nullopt;
    std::vector<std::string> out;
    for (auto f : textio::split(e->value, ','))
    {
        f = textio::trim(f);
        if (f.empty())
            fail(section, key, "empty list element");
        out.emplace_back(f);
    }
    return out;
}

std::optional<std::vector<long long>> IniFile::get_int_list(const std::string &section, const std::string &key) const
{
    const auto items = get_string_list(section, key);
    if (!items)
        return std::nullopt;
    std::vector<long long> out;
    for (const auto &s : *items)
    {
        const auto v = textio::parse_int(s);
        if (!v)
            fail(section, key, "expected integers, got '" + s + "'");
        out.push_back(*v);
    }
    return out;
}

void IniFile::reject_unused() const
{
    const Entry *first = nullptr;
    std::pair<std::string, std::string> name;
    for (const auto &[k, e] : entries_)
        if (!used_.count(k) && (!first || e.line < first->line))
        {
            first = &e;
            name = k;
        }
    if (first)
        throw ConfigError(source_ + ":" + std::to_string(first->line) + ": unknown key [" + name.first + "] " +
                          name.second);
}

} // namespace wpt
