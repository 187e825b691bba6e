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

#ifndef WPT_ORACLE_HPP_
#define WPT_ORACLE_HPP_

// Reference computations that avoid the closed-form moment formulas: dense
// time-domain averaging of the received waveform and brute-force
// enumeration of the fourth-order index quadruples. Used by the test suites
// and by `wptsim oracle moments`.

#include <cstdint>

#include "wpt/signal.hpp"

namespace wpt::oracle
{

// Averages y(t)^2 and y(t)^4 over one fundamental period using
// ceil(oversampling * f_max * period) uniform samples.
WaveformMoments time_average_moments(const EffectiveTones &tones, const ToneGrid &grid, int oversampling = 32);

// (3/8) * sum over all (n1, n2, n3, n4) with n1 + n2 = n3 + n4 of
// a_n1 a_n2 conj(a_n3) conj(a_n4), enumerated directly. Returns the complex
// sum so callers can check its imaginary part.
cplx brute_force_m4(const EffectiveTones &tones);

struct MomentCheck
{
    std::size_t cases = 0;
    double max_rel_err_m2 = 0.0;
    double max_rel_err_m4 = 0.0;

    double max_rel_err() const noexcept { return max_rel_err_m2 > max_rel_err_m4 ? max_rel_err_m2 : max_rel_err_m4; }
};

// Random channel/weight pairs with M in [1, 4] and N in [1, 8] on a 2.4 GHz,
// 10 MHz grid; compares waveform_moments() against time_average_moments().
MomentCheck check_moments(std::uint64_t seed, std::size_t cases, int oversampling = 32);

} // namespace wpt::oracle

#endif
