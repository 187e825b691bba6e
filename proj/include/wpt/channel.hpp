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

#ifndef WPT_CHANNEL_HPP_
#define WPT_CHANNEL_HPP_

// Frequency-selective multipath channel between M transmit antennas and a
// single receive antenna: i.i.d. Rayleigh taps on a tapped delay line with
// an exponential power-delay profile and a per-location pathloss.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wpt/rng.hpp"
#include "wpt/signal.hpp"

namespace wpt
{

struct ChannelModelParams
{
    std::size_t n_taps = 8;
    double tap_spacing = 100e-9; // seconds between successive taps
    double pdp_decay = 0.7;      // power ratio between successive taps, (0, 1]
    double pathloss_db = 60.0;
    std::uint64_t seed = 0;

    // Throws ConfigError when an invariant is violated.
    void validate() const;
};

class ChannelRealization
{
public:
    ChannelRealization(ToneGrid grid, ComplexMatrix gains, std::string location_label = {});

    std::size_t m_antennas() const noexcept { return gains_.rows(); }
    std::size_t n_tones() const noexcept { return gains_.cols(); }
    const ToneGrid &grid() const noexcept { return grid_; }
    const ComplexMatrix &gains() const noexcept { return gains_; }
    cplx operator()(std::size_t m, std::size_t n) const noexcept { return gains_(m, n); }
    const std::string &location_label() const noexcept { return label_; }

    // ||h_n||^2 = sum_m |h_{m,n}|^2
    double tone_norm_squared(std::size_t n) const noexcept;

private:
    ToneGrid grid_;
    ComplexMatrix gains_;
    std::string label_;
};

struct Location
{
    std::string label;
    ChannelModelParams params;
};

// Per-tap variances pdp_decay^l normalized to a total of 10^(-pathloss/10).
std::vector<double> tap_variances(const ChannelModelParams &params);

// M x L matrix of independent CN(0, var_l) draws, antenna-major order.
ComplexMatrix sample_taps(const ChannelModelParams &params, std::size_t m_antennas, RandomStream &rng);

// h_{m,n} = sum_l taps(m,l) exp(-j omega_n l tap_spacing)
ChannelRealization frequency_response(const ComplexMatrix &taps, const ChannelModelParams &params,
                                      const ToneGrid &grid, std::string location_label = {});

// Labels L1..Lcount, pathloss uniform in [range.first, range.second] drawn
// from the `locations` stream of base_seed, seed_i = derive_key(base_seed,
// {locations, i}).
std::vector<Location> make_locations(std::size_t count, std::uint64_t base_seed,
                                     const ChannelModelParams &params_template,
                                     std::pair<double, double> pathloss_range_db);

// The channel seen at `location` during `frame`. Taps come from the stream
// derive_key(location.params.seed, {channel, frame}); they do not depend on
// the tone grid, and antenna m's taps do not depend on M, so sweeps over M
// and N share the same underlying propagation.
ChannelRealization realize_channel(const Location &location, std::size_t m_antennas, const ToneGrid &grid,
                                   std::uint64_t frame);

// Text matrix: one line per (m, n) with "m n real imag", 1-based indices,
// shortest round-trip decimal representation.
void save_channel(const ChannelRealization &channel, const std::filesystem::path &path);
ChannelRealization load_channel(const std::filesystem::path &path, const ToneGrid &grid,
                                std::string location_label = {});

} // namespace wpt

#endif
