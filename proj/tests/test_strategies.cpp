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

#include "wpt/channel.hpp"
#include "wpt/errors.hpp"
#include "wpt/strategies.hpp"

using namespace wpt;

namespace
{
ChannelRealization random_channel(RandomStream &rng, std::size_t m, const ToneGrid &g)
{
    ComplexMatrix h(m, g.n_tones());
    for (auto &v : h.data())
        v = rng.complex_gaussian();
    return ChannelRealization(g, std::move(h));
}
} // namespace

TEST_CASE("up_weights examples", "[strategies]")
{
    const auto w = up_weights(2, ToneGrid(2, 2.4e9, 10e6), 1.0);
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n)
            CHECK(w(m, n) == cplx(std::sqrt(0.5), 0.0));
    CHECK(up_weights(1, ToneGrid(1, 2.4e9, 10e6), 1.0)(0, 0) == cplx(std::sqrt(2.0), 0.0));
    for (std::size_t m : {1u, 3u, 4u})
        for (std::size_t n : {1u, 5u, 8u})
            CHECK(up_weights(m, ToneGrid(n, 2.4e9, 10e6), 2.0).transmit_power() == Catch::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("smf_weights examples", "[strategies]")
{
    const ToneGrid g1(1, 2.4e9, 10e6);
    const SmfParams unit{3.0, 1.0};
    const auto s = smf_weights(ChannelRealization(g1, ComplexMatrix(1, 1, 1.0)), unit);
    CHECK(std::abs(s(0, 0) - cplx(std::sqrt(2.0))) < 1e-15);

    for (double theta : {0.3, 1.7, -2.9})
    {
        const ChannelRealization ch(g1, ComplexMatrix(1, 1, std::polar(1.0, theta)));
        const auto w = smf_weights(ch, unit);
        CHECK(std::abs(w(0, 0) - std::polar(std::sqrt(2.0), -theta)) < 1e-14);
        const auto a = effective_tones(ch, w);
        CHECK(std::abs(a.amplitudes[0] - cplx(std::sqrt(2.0))) < 1e-14);
    }

    CHECK_THROWS_AS(smf_weights(ChannelRealization(ToneGrid(3, 2.4e9, 10e6), ComplexMatrix(2, 3)), unit),
                    DegenerateChannelError);
    CHECK_THROWS_AS(SmfParams({0.5, 1.0}).validate(), ConfigError);
}

TEST_CASE("SMF zeroes tones with a null channel", "[strategies]")
{
    const ToneGrid g(2, 2.4e9, 10e6);
    ComplexMatrix h(2, 2);
    h(0, 1) = cplx(0.5, 0.2);
    h(1, 1) = cplx(-0.1, 0.3);
    const auto w = smf_weights(ChannelRealization(g, h), SmfParams{});
    CHECK(w(0, 0) == cplx(0.0));
    CHECK(w(1, 0) == cplx(0.0));
    CHECK(w.transmit_power() == Catch::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("SMF with one tone is maximum-ratio transmission", "[strategies]")
{
    RandomStream rng(31);
    const ToneGrid g1(1, 2.4e9, 10e6);
    const double power = 1.0;
    const auto ch = random_channel(rng, 2, g1);
    const double mrt = power * ch.tone_norm_squared(0);
    for (double beta : {1.0, 2.0, 3.0})
    {
        const auto w = smf_weights(ch, SmfParams{beta, power});
        CHECK(received_rf_power(effective_tones(ch, w)) == Catch::Approx(mrt).epsilon(1e-12));
    }
    // Exhaustive search over amplitude split and relative phase.
    double best = 0.0;
    const int steps = 400;
    for (int i = 0; i <= steps; ++i)
    {
        const double th = 0.5 * std::numbers::pi * i / steps;
        for (int j = 0; j < steps; ++j)
        {
            const double ph = 2 * std::numbers::pi * j / steps;
            const cplx s0 = std::sqrt(2 * power) * std::cos(th);
            const cplx s1 = std::sqrt(2 * power) * std::sin(th) * std::polar(1.0, ph);
            best = std::max(best, 0.5 * std::norm(ch(0, 0) * s0 + ch(1, 0) * s1));
        }
    }
    CHECK(best <= mrt * (1 + 1e-12));
    CHECK(best >= mrt * (1 - 1e-3));
}

TEST_CASE("SMF power and phase equivariance", "[strategies][property]")
{
    RandomStream rng(32);
    for (int c = 0; c < 200; ++c)
    {
        const std::size_t m = 1 + c % 4, n = 1 + (c / 4) % 8;
        const ToneGrid g(n, 2.4e9, 10e6);
        const auto ch = random_channel(rng, m, g);
        const SmfParams p{1.0 + (c % 3), 2.0};
        const auto w = smf_weights(ch, p);
        CHECK(w.transmit_power() == Catch::Approx(2.0).epsilon(1e-9));

        const cplx rot = std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi));
        ComplexMatrix hr = ch.gains();
        for (auto &v : hr.data())
            v *= rot;
        const ChannelRealization chr(g, hr);
        const auto wr = smf_weights(chr, p);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < n; ++k)
                CHECK(std::abs(wr(i, k) - w(i, k) * std::conj(rot)) <= 1e-12 * std::max(1.0, std::abs(w(i, k))));
        const auto a = waveform_moments(effective_tones(ch, w), g);
        const auto ar = waveform_moments(effective_tones(chr, wr), g);
        CHECK(ar.m2 == Catch::Approx(a.m2).epsilon(1e-9));
        CHECK(ar.m4 == Catch::Approx(a.m4).epsilon(1e-9));
    }
}

TEST_CASE("select_codeword examples", "[strategies]")
{
    CHECK(select_codeword(std::vector<double>{1.0, 3.0, 2.0}) == 1);
    CHECK(select_codeword(std::vector<double>{2.0, 2.0}) == 0);
    CHECK(select_codeword(std::vector<double>{0.0}) == 0);
    CHECK_THROWS_AS(select_codeword(std::vector<double>{}), DomainError);
}

TEST_CASE("select_codeword is invariant under increasing transforms", "[strategies][property]")
{
    RandomStream rng(33);
    for (int c = 0; c < 500; ++c)
    {
        std::vector<double> x(1 + c % 64);
        for (auto &v : x)
            v = std::floor(rng.uniform() * 20.0); // coarse values force ties
        // Random monotone piecewise-linear map with two breakpoints.
        const double b1 = rng.uniform(0, 10), b2 = b1 + rng.uniform(0, 10);
        const double s0 = rng.uniform(0.1, 3), s1 = rng.uniform(0.1, 3), s2 = rng.uniform(0.1, 3);
        auto f = [&](double v) {
            if (v < b1)
                return s0 * v;
            if (v < b2)
                return s0 * b1 + s1 * (v - b1);
            return s0 * b1 + s1 * (b2 - b1) + s2 * (v - b2);
        };
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            y[i] = f(x[i]);
        CHECK(select_codeword(x) == select_codeword(y));
    }
}

TEST_CASE("feedback_bits examples", "[strategies]")
{
    CHECK(feedback_bits(1) == 0);
    CHECK(feedback_bits(2) == 1);
    CHECK(feedback_bits(3) == 2);
    CHECK(feedback_bits(4) == 2);
    CHECK(feedback_bits(5) == 3);
    CHECK(feedback_bits(64) == 6);
    CHECK(feedback_bits(65) == 7);
}
