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

// Serial reference vs OpenMP kernels on a codebook-sized workload.

#include <map>

#include <benchmark/benchmark.h>

#include "wpt/channel.hpp"
#include "wpt/codebook.hpp"
#include "wpt/kernels.hpp"

using namespace wpt;

namespace
{
struct Workload
{
    std::vector<ChannelRealization> channels;
    Codebook book;
};

const Workload &workload(std::size_t m, std::size_t n)
{
    static std::map<std::pair<std::size_t, std::size_t>, Workload> cache;
    auto it = cache.find({m, n});
    if (it == cache.end())
    {
        const ToneGrid g(n, 2.4e9, 10e6);
        const auto loc = make_locations(1, 1, ChannelModelParams{}, {60.0, 60.0})[0];
        std::vector<ChannelRealization> ch;
        for (std::size_t i = 0; i < 1000; ++i)
            ch.push_back(realize_channel(loc, m, g, i));
        RandomStream rng(2);
        it = cache.emplace(std::pair{m, n}, Workload{std::move(ch), gen_nested(m, g, 2.0, 64, rng)}).first;
    }
    return it->second;
}

void BM_DcTable(benchmark::State &state, Execution exec)
{
    const auto &w = workload(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const DiodeMomentModel model;
    for (auto _ : state)
    {
        auto t = kernels::dc_table(w.channels, w.book.entries(), model, exec);
        benchmark::DoNotOptimize(t.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(w.channels.size() * w.book.size()));
    state.counters["threads"] = exec == Execution::parallel ? kernels::max_threads() : 1;
}

void BM_BestCodeword(benchmark::State &state, Execution exec)
{
    const auto &w = workload(4, 8);
    const auto table = kernels::dc_table(w.channels, w.book.entries(), DiodeMomentModel{}, Execution::serial);
    for (auto _ : state)
    {
        auto best = kernels::best_codeword(table, exec);
        benchmark::DoNotOptimize(best.data());
    }
}
} // namespace

BENCHMARK_CAPTURE(BM_DcTable, serial, Execution::serial)->Args({1, 1})->Args({2, 4})->Args({4, 8});
BENCHMARK_CAPTURE(BM_DcTable, parallel, Execution::parallel)->Args({1, 1})->Args({2, 4})->Args({4, 8});
BENCHMARK_CAPTURE(BM_BestCodeword, serial, Execution::serial);
BENCHMARK_CAPTURE(BM_BestCodeword, parallel, Execution::parallel);

BENCHMARK_MAIN();
