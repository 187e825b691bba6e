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

#ifndef WPT_CODEBOOK_HPP_
#define WPT_CODEBOOK_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wpt/channel.hpp"
#include "wpt/kernels.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/rng.hpp"
#include "wpt/signal.hpp"

namespace wpt
{

// K waveform/beamforming codewords, all M x N with (1/2)||s||^2 = P.
class Codebook
{
public:
    Codebook(std::vector<WaveformWeights> entries, bool nested, std::string provenance = {});

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t m_antennas() const noexcept { return entries_.front().m_antennas(); }
    std::size_t n_tones() const noexcept { return entries_.front().n_tones(); }
    double power() const noexcept { return entries_.front().power_budget(); }
    bool nested() const noexcept { return nested_; }
    const std::string &provenance() const noexcept { return provenance_; }

    const WaveformWeights &operator[](std::size_t k) const noexcept { return entries_[k]; }
    std::span<const WaveformWeights> entries() const noexcept { return entries_; }

    // First k entries; for a nested codebook this is the exported k-book.
    Codebook prefix(std::size_t k) const;

    bool operator==(const Codebook &) const = default;

private:
    std::vector<WaveformWeights> entries_;
    bool nested_;
    std::string provenance_;
};

// i.i.d. CN(0, 1) entries, each codeword rescaled onto the power sphere.
Codebook gen_random(std::size_t m_antennas, const ToneGrid &grid, double power, std::size_t k, RandomStream &rng);

// k_max (power of two) codewords; entry 0 is the uniform-power codeword,
// the rest are random. Every power-of-two prefix is itself a codebook.
Codebook gen_nested(std::size_t m_antennas, const ToneGrid &grid, double power, std::size_t k_max,
                    RandomStream &rng);

struct LloydOptions
{
    std::size_t iters = 30;
    // Projected-gradient steps per cluster update.
    std::size_t ascent_steps = 10;
    // Backtracking halvings before a step is abandoned.
    int max_backtracks = 40;
    // The first `frozen_prefix` codewords take part in the assignment but
    // are never updated or re-seeded.
    std::size_t frozen_prefix = 0;
    double power = 2.0;
    Execution exec = Execution::parallel;
};

struct LloydTrace
{
    // Mean over the training set of the best-codeword dc power, measured
    // after every assignment step (entry 0 is the initial codebook).
    std::vector<double> objective;
    std::size_t iterations_run = 0;
    bool converged = false;
};

// Generalized Lloyd training on the moment model:
//   ASSIGN  each training channel to its best codeword (lowest index wins);
//   UPDATE  each codeword by projected gradient ascent on its cluster's mean
//           dc power, backtracking until the objective does not decrease,
//           projection = rescale to the power sphere;
//   empty clusters are re-seeded with the SMF (beta = 3) weights of the
//   currently worst-served training channel.
// Stops after options.iters rounds or when the assignment is unchanged.
// `initial` (if given) must have k entries; otherwise codewords start as the
// SMF weights of k distinct training channels drawn from rng.
Codebook train_lloyd(std::span<const ChannelRealization> training, std::size_t k, const DiodeMomentModel &model,
                     const LloydOptions &options, RandomStream &rng, const std::optional<Codebook> &initial = {},
                     LloydTrace *trace = nullptr);

// Nested family trained size by size: entry 0 is the uniform-power codeword,
// then for K = 2, 4, ..., k_max the codewords K/2..K-1 are trained with the
// first K/2 frozen, so every prefix is a trained codebook of its own.
Codebook train_nested_lloyd(std::span<const ChannelRealization> training, std::size_t k_max,
                            const DiodeMomentModel &model, const LloydOptions &options, RandomStream &rng);

// Mean over `channels` of max_k P_DC(codeword k).
double mean_best_dc_power(std::span<const ChannelRealization> channels, const Codebook &codebook,
                          const DiodeMomentModel &model, Execution exec = Execution::parallel);

// Text format:
//   wptcb v1 M N K P nested
//   provenance <free text>
//   K blocks of M*N lines "m n real imag" (1-based m, n; shortest exact
//   decimal), block k holds codeword k.
void save_codebook(const Codebook &codebook, const std::filesystem::path &path);
Codebook load_codebook(const std::filesystem::path &path);

} // namespace wpt

#endif
