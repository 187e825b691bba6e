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

#include "wpt/kernels.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wpt/errors.hpp"

namespace wpt::kernels
{

namespace
{
void check_dims(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords)
{
    if (channels.empty())
        return;
    const std::size_t m = channels.front().m_antennas();
    const std::size_t n = channels.front().n_tones();
    for (const auto &ch : channels)
        if (ch.m_antennas() != m || ch.n_tones() != n)
            throw DimensionError("dc_table: channels disagree on dimensions");
    for (const auto &w : codewords)
        if (w.m_antennas() != m || w.n_tones() != n)
            throw DimensionError("dc_table: channel is " + std::to_string(m) + "x" + std::to_string(n) +
                                 ", codeword is " + std::to_string(w.m_antennas()) + "x" +
                                 std::to_string(w.n_tones()));
}

void fill_row(const ChannelRealization &ch, std::span<const WaveformWeights> codewords, const DiodeMomentModel &model,
              std::span<double> out, std::span<cplx> scratch) noexcept
{
    for (std::size_t k = 0; k < codewords.size(); ++k)
    {
        effective_amplitudes(ch.gains(), codewords[k].matrix(), scratch);
        out[k] = model.dc_power(scratch);
    }
}
} // namespace

void effective_amplitudes(const ComplexMatrix &h, const ComplexMatrix &s, std::span<cplx> out) noexcept
{
    const std::size_t nt = h.cols();
    for (std::size_t n = 0; n < nt; ++n)
        out[n] = cplx{};
    for (std::size_t m = 0; m < h.rows(); ++m)
        for (std::size_t n = 0; n < nt; ++n)
            out[n] += h(m, n) * s(m, n);
}

DcTable dc_table_serial(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords,
                        const DiodeMomentModel &model)
{
    check_dims(channels, codewords);
    DcTable t{channels.size(), codewords.size(), std::vector<double>(channels.size() * codewords.size())};
    if (channels.empty())
        return t;
    std::vector<cplx> scratch(channels.front().n_tones());
    for (std::size_t c = 0; c < channels.size(); ++c)
        fill_row(channels[c], codewords, model, std::span<double>(t.values).subspan(c * t.n_codewords, t.n_codewords),
                 scratch);
    return t;
}

DcTable dc_table_parallel(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords,
                          const DiodeMomentModel &model)
{
    check_dims(channels, codewords);
    DcTable t{channels.size(), codewords.size(), std::vector<double>(channels.size() * codewords.size())};
    if (channels.empty())
        return t;
    const std::size_t n_tones = channels.front().n_tones();
    const auto n_ch = static_cast<std::ptrdiff_t>(channels.size());
#pragma omp parallel
    {
        std::vector<cplx> scratch(n_tones);
#pragma omp for schedule(static)
        for (std::ptrdiff_t c = 0; c < n_ch; ++c)
        {
            const auto cu = static_cast<std::size_t>(c);
            fill_row(channels[cu], codewords, model,
                     std::span<double>(t.values).subspan(cu * t.n_codewords, t.n_codewords), scratch);
        }
    }
    return t;
}

DcTable dc_table(std::span<const ChannelRealization> channels, std::span<const WaveformWeights> codewords,
                 const DiodeMomentModel &model, Execution exec)
{
    return exec == Execution::parallel ? dc_table_parallel(channels, codewords, model)
                                       : dc_table_serial(channels, codewords, model);
}

namespace
{
std::size_t row_argmax(const DcTable &t, std::size_t c) noexcept
{
    std::size_t best = 0;
    for (std::size_t k = 1; k < t.n_codewords; ++k)
        if (t(c, k) > t(c, best))
            best = k;
    return best;
}
} // namespace

std::vector<std::size_t> best_codeword_serial(const DcTable &table)
{
    if (table.n_codewords == 0)
        throw DomainError("best_codeword: empty codebook");
    std::vector<std::size_t> out(table.n_channels);
    for (std::size_t c = 0; c < table.n_channels; ++c)
        out[c] = row_argmax(table, c);
    return out;
}

std::vector<std::size_t> best_codeword_parallel(const DcTable &table)
{
    if (table.n_codewords == 0)
        throw DomainError("best_codeword: empty codebook");
    std::vector<std::size_t> out(table.n_channels);
    const auto n = static_cast<std::ptrdiff_t>(table.n_channels);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < n; ++c)
        out[static_cast<std::size_t>(c)] = row_argmax(table, static_cast<std::size_t>(c));
    return out;
}

std::vector<std::size_t> best_codeword(const DcTable &table, Execution exec)
{
    return exec == Execution::parallel ? best_codeword_parallel(table) : best_codeword_serial(table);
}

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int threads) noexcept
{
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

} // namespace wpt::kernels
