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

#include "wpt/strategies.hpp"

#include <cmath>

#include "wpt/errors.hpp"

namespace wpt
{

WaveformWeights up_weights(std::size_t m_antennas, const ToneGrid &grid, double power)
{
    if (m_antennas < 1)
        throw DomainError("up_weights: at least one antenna is required");
    if (!(power > 0.0))
        throw DomainError("up_weights: power must be positive");
    const double mn = static_cast<double>(m_antennas * grid.n_tones());
    return WaveformWeights(ComplexMatrix(m_antennas, grid.n_tones(), cplx{std::sqrt(2.0 * power / mn), 0.0}), power);
}

void SmfParams::validate() const
{
    if (!(beta >= 1.0) || !std::isfinite(beta))
        throw ConfigError("smf: beta must be >= 1");
    if (!(power_budget > 0.0) || !std::isfinite(power_budget))
        throw ConfigError("smf: power budget must be positive");
}

WaveformWeights smf_weights(const ChannelRealization &channel, const SmfParams &params)
{
    params.validate();
    const std::size_t m_count = channel.m_antennas();
    const std::size_t n_count = channel.n_tones();

    std::vector<double> norms(n_count);
    double denom = 0.0;
    for (std::size_t n = 0; n < n_count; ++n)
    {
        norms[n] = std::sqrt(channel.tone_norm_squared(n));
        denom += std::pow(norms[n], 2.0 * params.beta);
    }
    if (!(denom > 0.0))
        throw DegenerateChannelError("smf_weights: channel is zero on every tone");

    const double c = std::sqrt(2.0 * params.power_budget / denom);
    ComplexMatrix s(m_count, n_count);
    for (std::size_t n = 0; n < n_count; ++n)
    {
        if (!(norms[n] > 0.0))
            continue;
        const double scale = c * std::pow(norms[n], params.beta - 1.0);
        for (std::size_t m = 0; m < m_count; ++m)
            s(m, n) = scale * std::conj(channel(m, n));
    }
    // Rounding can push (1/2)||s||^2 a few ulps over P; land exactly on it.
    return WaveformWeights::on_power_sphere(std::move(s), params.power_budget);
}

std::size_t select_codeword(std::span<const double> measurements)
{
    if (measurements.empty())
        throw DomainError("select_codeword: no measurements");
    std::size_t best = 0;
    for (std::size_t k = 1; k < measurements.size(); ++k)
        if (measurements[k] > measurements[best])
            best = k;
    return best;
}

unsigned feedback_bits(std::size_t k_codewords)
{
    if (k_codewords < 1)
        throw DomainError("feedback_bits: K must be at least 1");
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < k_codewords)
        ++bits;
    return bits;
}

} // namespace wpt
