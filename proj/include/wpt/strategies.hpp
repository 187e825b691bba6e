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

#ifndef WPT_STRATEGIES_HPP_
#define WPT_STRATEGIES_HPP_

// Transmit strategies: uniform power (open loop), scaled matched filter
// (full CSI) and the receiver-side codeword selection of limited feedback.

#include <cstddef>
#include <span>

#include "wpt/channel.hpp"
#include "wpt/signal.hpp"

namespace wpt
{

// s_{m,n} = sqrt(2P / (M N)) on every antenna and tone.
WaveformWeights up_weights(std::size_t m_antennas, const ToneGrid &grid, double power);

struct SmfParams
{
    double beta = 3.0;
    double power_budget = 2.0;

    void validate() const;
};

// s_n = c ||h_n||^beta h_n^H / ||h_n||, c = sqrt(2P / sum_n ||h_n||^(2 beta)).
// Tones with a zero channel get zero weight. Throws DegenerateChannelError
// when every tone is zero.
WaveformWeights smf_weights(const ChannelRealization &channel, const SmfParams &params);

// Index (0-based) of the largest reading; ties go to the lowest index.
std::size_t select_codeword(std::span<const double> measurements);

// ceil(log2 K); 0 for K = 1.
unsigned feedback_bits(std::size_t k_codewords);

} // namespace wpt

#endif
