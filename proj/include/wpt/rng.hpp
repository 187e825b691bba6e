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

#ifndef WPT_RNG_HPP_
#define WPT_RNG_HPP_

// Counter-based random numbers.
//
// All randomness in the simulator comes from Philox4x32-10 (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11). A stream is fully
// described by a 64-bit key; its n-th 128-bit block is philox(counter = n,
// key). Independent streams for (location, frame, purpose) are obtained by
// hashing the parent key with the stream identifiers through SplitMix64, so
// no generator state is ever shared between work items.
//
// Conversions:
//   uniform()  : top 53 bits of a 64-bit word, times 2^-53, in [0, 1)
//   gaussian() : Box-Muller on two uniforms, u1 mapped to (0, 1]; both
//                outputs of a pair are used in order
//   complex_gaussian(var) : real and imaginary parts each N(0, var / 2)

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>

namespace wpt
{

using Philox4x32Counter = std::array<std::uint32_t, 4>;
using Philox4x32Key = std::array<std::uint32_t, 2>;

// Ten-round Philox4x32 block function.
Philox4x32Counter philox4x32_10(Philox4x32Counter counter, Philox4x32Key key) noexcept;

// SplitMix64 finalizer; bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Deterministic key for a child stream: folds each id into the parent key.
std::uint64_t derive_key(std::uint64_t parent, std::initializer_list<std::uint64_t> ids) noexcept;

// Stream identifiers used throughout the simulator.
enum class StreamPurpose : std::uint64_t
{
    channel = 1,
    adc_noise = 2,
    link = 3,
    codebook = 4,
    training_set = 5,
    locations = 6,
    oracle = 7,
};

class RandomStream
{
public:
    explicit RandomStream(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t key() const noexcept { return key_; }

    // Child stream; does not advance this stream.
    RandomStream split(std::initializer_list<std::uint64_t> ids) const noexcept
    {
        return RandomStream(derive_key(key_, ids));
    }
    RandomStream split(StreamPurpose purpose, std::uint64_t index = 0) const noexcept
    {
        return split({static_cast<std::uint64_t>(purpose), index});
    }

    std::uint64_t next_u64() noexcept;
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    double gaussian() noexcept;
    std::complex<double> complex_gaussian(double variance = 1.0) noexcept;

private:
    std::uint64_t key_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    unsigned buffered_words_ = 0;
    std::optional<double> spare_gaussian_;
};

} // namespace wpt

#endif
