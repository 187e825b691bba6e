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

#include "wpt/rng.hpp"

#include <cmath>
#include <numbers>

namespace wpt
{

namespace
{
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) noexcept
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}
} // namespace

Philox4x32Counter philox4x32_10(Philox4x32Counter c, Philox4x32Key k) noexcept
{
    for (int round = 0; round < 10; ++round)
    {
        if (round > 0)
        {
            k[0] += kPhiloxW0;
            k[1] += kPhiloxW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c[0], hi0, lo0);
        mulhilo(kPhiloxM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t parent, std::initializer_list<std::uint64_t> ids) noexcept
{
    std::uint64_t key = splitmix64(parent);
    for (std::uint64_t id : ids)
        key = splitmix64(key ^ splitmix64(id + 0x632BE59BD9B4E019ull));
    return key;
}

std::uint64_t RandomStream::next_u64() noexcept
{
    if (buffered_words_ < 2)
    {
        const Philox4x32Counter ctr = {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32), 0u, 0u};
        const Philox4x32Key k = {static_cast<std::uint32_t>(key_), static_cast<std::uint32_t>(key_ >> 32)};
        buffer_ = philox4x32_10(ctr, k);
        ++block_;
        buffered_words_ = 4;
    }
    const unsigned i = 4 - buffered_words_;
    buffered_words_ -= 2;
    return (static_cast<std::uint64_t>(buffer_[i + 1]) << 32) | buffer_[i];
}

double RandomStream::uniform() noexcept
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() noexcept
{
    if (spare_gaussian_)
    {
        const double g = *spare_gaussian_;
        spare_gaussian_.reset();
        return g;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_gaussian_ = r * std::sin(theta);
    return r * std::cos(theta);
}

std::complex<double> RandomStream::complex_gaussian(double variance) noexcept
{
    const double sd = std::sqrt(0.5 * variance);
    const double re = gaussian();
    const double im = gaussian();
    return {sd * re, sd * im};
}

} // namespace wpt
