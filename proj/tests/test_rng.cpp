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
#include <vector>

#include "wpt/rng.hpp"

using namespace wpt;

TEST_CASE("Philox4x32-10 known-answer vectors", "[rng]")
{
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == Philox4x32Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          Philox4x32Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          Philox4x32Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("Streams are reproducible and split streams differ", "[rng]")
{
    RandomStream a(42), b(42);
    for (int i = 0; i < 100; ++i)
        REQUIRE(a.next_u64() == b.next_u64());

    const RandomStream root(42);
    RandomStream c1 = root.split(StreamPurpose::channel, 0);
    RandomStream c2 = root.split(StreamPurpose::channel, 1);
    RandomStream c3 = root.split(StreamPurpose::adc_noise, 0);
    const auto x1 = c1.next_u64(), x2 = c2.next_u64(), x3 = c3.next_u64();
    CHECK(x1 != x2);
    CHECK(x1 != x3);
    CHECK(x2 != x3);
    // split() does not advance the parent
    RandomStream p(7), q(7);
    (void)p.split({1, 2, 3});
    CHECK(p.next_u64() == q.next_u64());
}

TEST_CASE("Uniform and Gaussian draws have the right first two moments", "[rng]")
{
    RandomStream rng(2024);
    const int n = 200000;
    double su = 0, sg = 0, sg2 = 0;
    double umin = 1, umax = 0;
    for (int i = 0; i < n; ++i)
    {
        const double u = rng.uniform();
        umin = std::min(umin, u);
        umax = std::max(umax, u);
        su += u;
        const double g = rng.gaussian();
        sg += g;
        sg2 += g * g;
    }
    CHECK(umin >= 0.0);
    CHECK(umax < 1.0);
    CHECK(su / n == Catch::Approx(0.5).margin(0.005));
    CHECK(sg / n == Catch::Approx(0.0).margin(0.01));
    CHECK(sg2 / n == Catch::Approx(1.0).margin(0.01));

    double sc = 0;
    for (int i = 0; i < n; ++i)
        sc += std::norm(rng.complex_gaussian(2.0));
    CHECK(sc / n == Catch::Approx(2.0).epsilon(0.01));
}
