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

#include "wpt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wpt/errors.hpp"
#include "wpt/textio.hpp"

namespace wpt
{

void ChannelModelParams::validate() const
{
    if (n_taps < 1)
        throw ConfigError("channel: n_taps must be at least 1");
    if (!(tap_spacing > 0.0) || !std::isfinite(tap_spacing))
        throw ConfigError("channel: tap_spacing must be positive");
    if (!(pdp_decay > 0.0 && pdp_decay <= 1.0))
        throw ConfigError("channel: pdp_decay must lie in (0, 1]");
    if (!std::isfinite(pathloss_db))
        throw ConfigError("channel: pathloss_db must be finite");
}

ChannelRealization::ChannelRealization(ToneGrid grid, ComplexMatrix gains, std::string location_label)
    : grid_(std::move(grid)), gains_(std::move(gains)), label_(std::move(location_label))
{
    if (gains_.rows() < 1 || gains_.cols() != grid_.n_tones())
        throw DimensionError("ChannelRealization: gain matrix is " + std::to_string(gains_.rows()) + "x" +
                             std::to_string(gains_.cols()) + " for a grid of " + std::to_string(grid_.n_tones()) +
                             " tones");
    for (const cplx &h : gains_.data())
        if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
            throw DomainError("ChannelRealization: non-finite gain");
}

double ChannelRealization::tone_norm_squared(std::size_t n) const noexcept
{
    double acc = 0.0;
    for (std::size_t m = 0; m < gains_.rows(); ++m)
        acc += std::norm(gains_(m, n));
    return acc;
}

std::vector<double> tap_variances(const ChannelModelParams &params)
{
    params.validate();
    std::vector<double> var(params.n_taps);
    double total = 0.0;
    double p = 1.0;
    for (std::size_t l = 0; l < params.n_taps; ++l)
    {
        var[l] = p;
        total += p;
        p *= params.pdp_decay;
    }
    const double gain = std::pow(10.0, -params.pathloss_db / 10.0);
    for (double &v : var)
        v *= gain / total;
    return var;
}

ComplexMatrix sample_taps(const ChannelModelParams &params, std::size_t m_antennas, RandomStream &rng)
{
    if (m_antennas < 1)
        throw DomainError("sample_taps: at least one antenna is required");
    const std::vector<double> var = tap_variances(params);
    ComplexMatrix taps(m_antennas, params.n_taps);
    for (std::size_t m = 0; m < m_antennas; ++m)
        for (std::size_t l = 0; l < params.n_taps; ++l)
            taps(m, l) = rng.complex_gaussian(var[l]);
    return taps;
}

ChannelRealization frequency_response(const ComplexMatrix &taps, const ChannelModelParams &params,
                                      const ToneGrid &grid, std::string location_label)
{
    if (taps.cols() != params.n_taps)
        throw DimensionError("frequency_response: tap matrix has " + std::to_string(taps.cols()) +
                             " taps, parameters say " + std::to_string(params.n_taps));
    const auto omega = grid.angular_frequencies();
    ComplexMatrix h(taps.rows(), grid.n_tones());
    for (std::size_t n = 0; n < grid.n_tones(); ++n)
    {
        std::vector<cplx> phasor(taps.cols());
        for (std::size_t l = 0; l < taps.cols(); ++l)
            phasor[l] = std::polar(1.0, -omega[n] * static_cast<double>(l) * params.tap_spacing);
        for (std::size_t m = 0; m < taps.rows(); ++m)
        {
            cplx acc{};
            for (std::size_t l = 0; l < taps.cols(); ++l)
                acc += taps(m, l) * phasor[l];
            h(m, n) = acc;
        }
    }
    return ChannelRealization(grid, std::move(h), std::move(location_label));
}

std::vector<Location> make_locations(std::size_t count, std::uint64_t base_seed,
                                     const ChannelModelParams &params_template,
                                     std::pair<double, double> pathloss_range_db)
{
    if (count < 1)
        throw DomainError("make_locations: count must be at least 1");
    if (!(pathloss_range_db.first <= pathloss_range_db.second))
        throw DomainError("make_locations: pathloss range is inverted");
    params_template.validate();

    RandomStream pl_stream = RandomStream(base_seed).split(StreamPurpose::locations);
    std::vector<Location> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        Location loc;
        loc.label = "L" + std::to_string(i + 1);
        loc.params = params_template;
        const double u = pl_stream.uniform();
        loc.params.pathloss_db = pathloss_range_db.first == pathloss_range_db.second
                                     ? pathloss_range_db.first
                                     : pathloss_range_db.first + (pathloss_range_db.second - pathloss_range_db.first) * u;
        loc.params.seed = derive_key(base_seed, {static_cast<std::uint64_t>(StreamPurpose::locations), i + 1});
        out.push_back(std::move(loc));
    }
    return out;
}

ChannelRealization realize_channel(const Location &location, std::size_t m_antennas, const ToneGrid &grid,
                                   std::uint64_t frame)
{
    RandomStream rng = RandomStream(location.params.seed).split(StreamPurpose::channel, frame);
    const ComplexMatrix taps = sample_taps(location.params, m_antennas, rng);
    return frequency_response(taps, location.params, grid, location.label);
}

void save_channel(const ChannelRealization &channel, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("save_channel: cannot open " + path.string());
    for (std::size_t m = 0; m < channel.m_antennas(); ++m)
        for (std::size_t n = 0; n < channel.n_tones(); ++n)
            out << (m + 1) << ' ' << (n + 1) << ' ' << textio::format_exact(channel(m, n).real()) << ' '
                << textio::format_exact(channel(m, n).imag()) << '\n';
    if (!out)
        throw IoError("save_channel: write failed for " + path.string());
}

ChannelRealization load_channel(const std::filesystem::path &path, const ToneGrid &grid, std::string location_label)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError("load_channel: cannot open " + path.string());

    struct Entry
    {
        std::size_t m, n;
        cplx v;
    };
    std::vector<Entry> entries;
    std::size_t max_m = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (textio::trim(line).empty())
            continue;
        const auto f = textio::split_ws(line);
        if (f.size() != 4)
            throw LoadError("load_channel: expected 'm n real imag'", lineno);
        const auto m = textio::parse_int(f[0]);
        const auto n = textio::parse_int(f[1]);
        const auto re = textio::parse_double(f[2]);
        const auto im = textio::parse_double(f[3]);
        if (!m || !n || !re || !im || *m < 1 || *n < 1)
            throw LoadError("load_channel: malformed entry", lineno);
        if (static_cast<std::size_t>(*n) > grid.n_tones())
            throw LoadError("load_channel: tone index exceeds grid size", lineno);
        entries.push_back({static_cast<std::size_t>(*m - 1), static_cast<std::size_t>(*n - 1), {*re, *im}});
        max_m = std::max(max_m, static_cast<std::size_t>(*m));
    }
    if (entries.size() != max_m * grid.n_tones())
        throw LoadError("load_channel: expected " + std::to_string(max_m * grid.n_tones()) + " entries, found " +
                        std::to_string(entries.size()));
    ComplexMatrix h(max_m, grid.n_tones());
    std::vector<bool> seen(h.size(), false);
    for (const Entry &e : entries)
    {
        const std::size_t idx = e.m * grid.n_tones() + e.n;
        if (seen[idx])
            throw LoadError("load_channel: duplicate entry (" + std::to_string(e.m + 1) + ", " +
                            std::to_string(e.n + 1) + ")");
        seen[idx] = true;
        h(e.m, e.n) = e.v;
    }
    return ChannelRealization(grid, std::move(h), std::move(location_label));
}

} // namespace wpt
