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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "wpt/channel.hpp"
#include "wpt/errors.hpp"
#include "wpt/oracle.hpp"
#include "wpt/signal.hpp"

using namespace wpt;

namespace
{
ToneGrid grid_of(std::size_t n)
{
    return ToneGrid(n, 2.4e9, 10e6);
}

EffectiveTones random_tones(RandomStream &rng, std::size_t n)
{
    EffectiveTones t;
    for (std::size_t i = 0; i < n; ++i)
        t.amplitudes.push_back(rng.complex_gaussian());
    return t;
}

double rel(double a, double b)
{
    return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b);
}
} // namespace

TEST_CASE("ToneGrid spacing and centering", "[signal]")
{
    for (std::size_t n : {1u, 2u, 3u, 8u})
    {
        const ToneGrid g = grid_of(n);
        const auto w = g.angular_frequencies();
        REQUIRE(w.size() == n);
        double mean = 0;
        for (double x : w)
            mean += x;
        mean /= static_cast<double>(n);
        CHECK(rel(mean, 2 * std::numbers::pi * 2.4e9) < 1e-12);
        for (std::size_t i = 1; i < n; ++i)
        {
            CHECK(w[i] > w[i - 1]);
            CHECK(rel(w[i] - w[i - 1], 2 * std::numbers::pi * 10e6 / static_cast<double>(n)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(ToneGrid(0, 2.4e9, 10e6), DomainError);
    CHECK_THROWS_AS(ToneGrid(4, 2.4e9, 0.0), DomainError);
}

TEST_CASE("WaveformWeights enforces the power budget at construction", "[signal]")
{
    ComplexMatrix s(1, 1, {std::sqrt(2.0), 0.0});
    CHECK_NOTHROW(WaveformWeights(s, 1.0));
    CHECK_NOTHROW(WaveformWeights(s, 1.0 * (1 + 5e-10)));
    CHECK_THROWS_AS(WaveformWeights(ComplexMatrix(1, 1, {1.5, 0.0}), 1.0), DomainError);
    const auto w = WaveformWeights::on_power_sphere(ComplexMatrix(3, 5, {0.3, -2.0}), 2.0);
    CHECK(rel(w.transmit_power(), 2.0) < 1e-12);
}

TEST_CASE("synthesize_transmit_waveform examples", "[signal]")
{
    const ToneGrid g = grid_of(1);
    const std::vector<double> t0{0.0};
    CHECK(synthesize_transmit_waveform(WaveformWeights(ComplexMatrix(1, 1, {1.0, 0.0}), 1.0), g, 0, t0)[0] == 1.0);
    CHECK(synthesize_transmit_waveform(WaveformWeights(ComplexMatrix(1, 1, {0.0, 1.0}), 1.0), g, 0, t0)[0] == 0.0);

    const WaveformWeights zero(ComplexMatrix(2, 4), 1.0);
    const std::vector<double> ts{0.0, 1.3e-8, 7.7e-7};
    for (double y : synthesize_transmit_waveform(zero, grid_of(4), 1, ts))
        CHECK(y == 0.0);

    CHECK_THROWS_AS(synthesize_transmit_waveform(zero, grid_of(4), 2, ts), DomainError);
    CHECK_THROWS_AS(synthesize_transmit_waveform(zero, grid_of(3), 0, ts), DimensionError);
}

TEST_CASE("effective_tones examples", "[signal]")
{
    const ToneGrid g1 = grid_of(1);
    {
        const ChannelRealization ch(g1, ComplexMatrix(1, 1, {1.0, 0.0}));
        const auto a = effective_tones(ch, WaveformWeights(ComplexMatrix(1, 1, {std::sqrt(2.0), 0.0}), 1.0));
        REQUIRE(a.size() == 1);
        CHECK(a.amplitudes[0] == cplx(std::sqrt(2.0), 0.0));
    }
    {
        ComplexMatrix h(2, 1);
        h(0, 0) = 1.0;
        h(1, 0) = -1.0;
        const cplx c(0.4, -0.3);
        const auto a = effective_tones(ChannelRealization(g1, h), WaveformWeights(ComplexMatrix(2, 1, c), 1.0));
        CHECK(a.amplitudes[0] == cplx(0.0, 0.0));
    }
    {
        // Random 2x2 against a direct loop.
        RandomStream rng(11);
        ComplexMatrix h(2, 2), s(2, 2);
        for (auto &v : h.data())
            v = rng.complex_gaussian();
        for (auto &v : s.data())
            v = rng.complex_gaussian();
        const auto w = WaveformWeights::on_power_sphere(s, 1.0);
        const auto a = effective_tones(ChannelRealization(grid_of(2), h), w);
        for (std::size_t n = 0; n < 2; ++n)
        {
            const cplx expect = h(0, n) * w(0, n) + h(1, n) * w(1, n);
            CHECK(std::abs(a.amplitudes[n] - expect) <= 1e-15 * std::abs(expect));
        }
    }
    CHECK_THROWS_AS(effective_tones(ChannelRealization(grid_of(2), ComplexMatrix(2, 2)),
                                    WaveformWeights(ComplexMatrix(1, 2), 1.0)),
                    DimensionError);
}

TEST_CASE("received_rf_power examples", "[signal]")
{
    CHECK(received_rf_power({{cplx(std::sqrt(2.0), 0.0)}}) == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(received_rf_power({{1.0, 1.0, 1.0, 1.0}}) == 2.0);

    RandomStream rng(5);
    const ToneGrid g = grid_of(8);
    const EffectiveTones a = random_tones(rng, 8);
    const auto dense = oracle::time_average_moments(a, g, 16);
    CHECK(rel(received_rf_power(a), dense.m2) < 1e-6);
}

TEST_CASE("waveform_moments examples", "[signal]")
{
    const ToneGrid g1 = grid_of(1);
    const auto one = waveform_moments({{cplx(std::sqrt(2.0), 0.0)}}, g1);
    CHECK(one.m2 == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(one.m4 == Catch::Approx(1.5).epsilon(1e-15));
    // Frozen from the dense time-average oracle (y = sqrt(2) cos(wt)).
    const auto dense = oracle::time_average_moments({{cplx(std::sqrt(2.0), 0.0)}}, g1, 32);
    CHECK(rel(dense.m4, 1.5) < 1e-9);

    const auto zero = waveform_moments({{0.0, 0.0, 0.0, 0.0}}, grid_of(4));
    CHECK(zero.m2 == 0.0);
    CHECK(zero.m4 == 0.0);

    RandomStream rng(9);
    const EffectiveTones a = random_tones(rng, 4);
    const auto closed = waveform_moments(a, grid_of(4));
    const auto d4 = oracle::time_average_moments(a, grid_of(4), 32);
    CHECK(rel(closed.m2, d4.m2) < 1e-6);
    CHECK(rel(closed.m4, d4.m4) < 1e-6);
}

TEST_CASE("Convolution form of m4 equals quadruple enumeration", "[signal][property]")
{
    RandomStream rng(77);
    for (int c = 0; c < 200; ++c)
    {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8);
        const EffectiveTones a = random_tones(rng, n);
        const cplx brute = oracle::brute_force_m4(a);
        REQUIRE(std::abs(brute.imag()) < 1e-9 * std::abs(brute.real()));
        CHECK(rel(waveform_moments(a.amplitudes).m4, brute.real()) < 1e-12);
    }
}

TEST_CASE("Closed-form moments match time averages for N <= 8", "[signal][property]")
{
    RandomStream rng(123);
    double worst = 0.0;
    for (int c = 0; c < 100; ++c)
    {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8);
        const ToneGrid g = grid_of(n);
        const EffectiveTones a = random_tones(rng, n);
        const auto closed = waveform_moments(a, g);
        const auto dense = oracle::time_average_moments(a, g, 16);
        worst = std::max({worst, rel(closed.m2, dense.m2), rel(closed.m4, dense.m4)});
        // P_RF and m2 are the same formula.
        REQUIRE(received_rf_power(a) == closed.m2);
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("Single tone satisfies m4 = (3/2) m2^2", "[signal][property]")
{
    RandomStream rng(31);
    for (int c = 0; c < 100; ++c)
    {
        const auto mom = waveform_moments(std::vector<cplx>{rng.complex_gaussian(5.0)});
        CHECK(mom.m4 >= 1.5 * mom.m2 * mom.m2 * (1 - 1e-12));
        CHECK(rel(mom.m4, 1.5 * mom.m2 * mom.m2) < 1e-12);
    }
}

TEST_CASE("papr examples", "[signal]")
{
    CHECK(papr({{cplx(1.0, 0.0)}}, grid_of(1)) == Catch::Approx(2.0).epsilon(0.01));
    CHECK(papr({{1.0, 1.0, 1.0, 1.0}}, grid_of(4)) == Catch::Approx(8.0).epsilon(0.02));
    CHECK_THROWS_AS(papr({{0.0, 0.0}}, grid_of(2)), DomainError);
    CHECK_THROWS_AS(papr({{1.0}}, grid_of(1), 4), DomainError);
}

TEST_CASE("Receive synthesis through a unit channel equals the antenna sum", "[signal][property]")
{
    RandomStream rng(8);
    for (int c = 0; c < 20; ++c)
    {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 4);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8);
        const ToneGrid g = grid_of(n);
        ChannelModelParams p;
        p.n_taps = 1;
        p.pathloss_db = 0;
        const ChannelRealization ch = frequency_response(ComplexMatrix(m, 1, {1.0, 0.0}), p, g);
        ComplexMatrix s(m, n);
        for (auto &v : s.data())
            v = rng.complex_gaussian();
        const auto w = WaveformWeights::on_power_sphere(s, 1.0);

        std::vector<double> ts;
        for (int i = 0; i < 50; ++i)
            ts.push_back(rng.uniform() * g.fundamental_period());
        const auto rx = synthesize_received_waveform(effective_tones(ch, w), g, ts);
        std::vector<double> sum(ts.size(), 0.0);
        for (std::size_t a = 0; a < m; ++a)
        {
            const auto tx = synthesize_transmit_waveform(w, g, a, ts);
            for (std::size_t i = 0; i < ts.size(); ++i)
                sum[i] += tx[i];
        }
        for (std::size_t i = 0; i < ts.size(); ++i)
            CHECK(std::abs(rx[i] - sum[i]) <= 1e-9);
    }
}
