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

#include "wpt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "wpt/channel.hpp"
#include "wpt/rng.hpp"

namespace wpt::oracle
{

WaveformMoments time_average_moments(const EffectiveTones &tones, const ToneGrid &grid, int oversampling)
{
    const double period = grid.fundamental_period();
    const auto samples = static_cast<std::size_t>(
        std::ceil(static_cast<double>(oversampling) * grid.highest_frequency_hz() * period));
    const auto omega = grid.angular_frequencies();
    double s2 = 0.0, s4 = 0.0;
    for (std::size_t i = 0; i < samples; ++i)
    {
        const double t = period * static_cast<double>(i) / static_cast<double>(samples);
        double y = 0.0;
        for (std::size_t n = 0; n < tones.size(); ++n)
            y += std::real(tones.amplitudes[n] * std::exp(cplx(0.0, omega[n] * t)));
        const double y2 = y * y;
        s2 += y2;
        s4 += y2 * y2;
    }
    return {s2 / static_cast<double>(samples), s4 / static_cast<double>(samples)};
}

cplx brute_force_m4(const EffectiveTones &tones)
{
    const auto &a = tones.amplitudes;
    const std::size_t n = a.size();
    cplx acc{};
    for (std::size_t n1 = 0; n1 < n; ++n1)
        for (std::size_t n2 = 0; n2 < n; ++n2)
            for (std::size_t n3 = 0; n3 < n; ++n3)
                for (std::size_t n4 = 0; n4 < n; ++n4)
                    if (n1 + n2 == n3 + n4)
                        acc += a[n1] * a[n2] * std::conj(a[n3]) * std::conj(a[n4]);
    return 0.375 * acc;
}

MomentCheck check_moments(std::uint64_t seed, std::size_t cases, int oversampling)
{
    MomentCheck out;
    RandomStream rng = RandomStream(seed).split(StreamPurpose::oracle);
    ChannelModelParams params;
    params.pathloss_db = 0.0;
    for (std::size_t c = 0; c < cases; ++c)
    {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 4.0);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
        const ToneGrid grid(n, 2.4e9, 10e6);
        const ChannelRealization ch = frequency_response(sample_taps(params, m, rng), params, grid);
        ComplexMatrix s(m, n);
        for (cplx &v : s.data())
            v = rng.complex_gaussian();
        const WaveformWeights w = WaveformWeights::on_power_sphere(std::move(s), 1.0);
        const EffectiveTones tones = effective_tones(ch, w);

        const WaveformMoments closed = waveform_moments(tones, grid);
        const WaveformMoments dense = time_average_moments(tones, grid, oversampling);
        out.max_rel_err_m2 = std::max(out.max_rel_err_m2, std::abs(closed.m2 - dense.m2) / dense.m2);
        out.max_rel_err_m4 = std::max(out.max_rel_err_m4, std::abs(closed.m4 - dense.m4) / dense.m4);
        ++out.cases;
    }
    return out;
}

} // namespace wpt::oracle
