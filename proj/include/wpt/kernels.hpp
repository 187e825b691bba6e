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

#ifndef WPT_KERNELS_HPP_
#define WPT_KERNELS_HPP_

// Ensemble kernels: dc power of every (channel, codeword) pair and the
// per-channel best codeword. Each kernel has a serial reference and an
// OpenMP version; both produce bit-identical results because every output
// element is computed by exactly one thread with the same operation order.

#include <cstddef>
#include <span>
#include <vector>

#include "wpt/channel.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/signal.hpp"

namespace wpt
{

enum class Execution
{
    serial,
    parallel,
};

namespace kernels
{

// Row-major [channel][codeword] table of dc powers.
struct DcTable
{
    std::size_t n_channels = 0;
    std::size_t n_codewords = 0;
    std::vector<double> values;

    double operator()(std::size_t c, std::size_t k) const noexcept { return values[c * n_codewords + k]; }
    std::span<const double> row(std::size_t c) const noexcept
    {
        return std::span<const double>(values).subspan(c * n_codewords, n_codewords);
    }
};

// a_n = sum_m h_{m,n} s_{m,n} into `out` (length N); no dimension checks.
void effective_amplitudes(const ComplexMatrix &h, const ComplexMatrix &s, std::span<cplx> out) noexcept;

DcTable dc_table_serial(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords,
                        const DiodeMomentModel &model);
DcTable dc_table_parallel(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords,
                          const DiodeMomentModel &model);
DcTable dc_table(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords,
                 const DiodeMomentModel &model, Execution exec);

// Lowest-index argmax of each row.
std::vector<std::size_t> best_codeword_serial(const DcTable &table);
std::vector<std::size_t> best_codeword_parallel(const DcTable &table);
std::vector<std::size_t> best_codeword(const DcTable &table, Execution exec);

// Number of worker threads the parallel kernels will use.
int max_threads() noexcept;
void set_threads(int threads) noexcept;

} // namespace kernels
} // namespace wpt

#endif
