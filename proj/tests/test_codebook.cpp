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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wpt/channel.hpp"
#include "wpt/codebook.hpp"
#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"
#include "wpt/strategies.hpp"

using namespace wpt;

namespace
{
std::vector<ChannelRealization> channels(std::size_t m, const ToneGrid &g, std::size_t count, std::uint64_t seed,
                                         double pathloss_db = 60.0)
{
    const auto locs = make_locations(1, seed, ChannelModelParams{}, {pathloss_db, pathloss_db});
    std::vector<ChannelRealization> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(realize_channel(locs[0], m, g, i));
    return out;
}

double dc(const ChannelRealization &ch, const WaveformWeights &w, const DiodeMomentModel &model)
{
    return model.dc_power(waveform_moments(effective_tones(ch, w), ch.grid()));
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("gen_random shape, power and determinism", "[codebook]")
{
    const ToneGrid g(8, 2.4e9, 10e6);
    RandomStream a(3), b(3);
    const auto book = gen_random(4, g, 2.0, 64, a);
    CHECK(book.size() == 64);
    CHECK_FALSE(book.nested());
    for (const auto &w : book.entries())
    {
        CHECK(w.matrix().size() == 32);
        CHECK(w.transmit_power() == Catch::Approx(2.0).epsilon(1e-9));
    }
    CHECK(gen_random(4, g, 2.0, 64, b) == book);
    RandomStream c(3);
    CHECK(gen_random(1, ToneGrid(1, 2.4e9, 10e6), 1.0, 1, c)[0].transmit_power() == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gen_nested prefix property", "[codebook]")
{
    const ToneGrid g(4, 2.4e9, 10e6);
    RandomStream rng(4);
    const auto book = gen_nested(2, g, 2.0, 64, rng);
    CHECK(book.nested());
    CHECK(book[0] == up_weights(2, g, 2.0));
    const auto four = book.prefix(4);
    REQUIRE(four.size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(four[k] == book[k]);
    RandomStream r2(4);
    CHECK_THROWS_AS(gen_nested(2, g, 2.0, 48, r2), DomainError);
    CHECK_THROWS_AS(book.prefix(65), DomainError);
}

TEST_CASE("Best-of-K is non-decreasing along nested families", "[codebook][property]")
{
    const ToneGrid g(8, 2.4e9, 10e6);
    RandomStream rng(5);
    const auto random_family = gen_nested(4, g, 2.0, 64, rng);
    const auto train = channels(4, g, 128, 9);
    LloydOptions opt;
    opt.iters = 3;
    const auto lloyd_family = train_nested_lloyd(train, 64, DiodeMomentModel{}, opt, rng);
    CHECK(lloyd_family[0] == up_weights(4, g, 2.0));

    const auto test = channels(4, g, 100, 10);
    for (const Codebook *book : {&random_family, &lloyd_family})
    {
        const auto table = kernels::dc_table(test, book->entries(), DiodeMomentModel{}, Execution::serial);
        int violations = 0;
        for (std::size_t c = 0; c < test.size(); ++c)
        {
            double prev = -1.0;
            for (std::size_t k = 1; k <= 64; k *= 2)
            {
                const auto row = table.row(c).subspan(0, k);
                const double best = *std::max_element(row.begin(), row.end());
                violations += best < prev;
                prev = best;
            }
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("Lloyd with one codeword matches or beats SMF on a fixed channel", "[codebook]")
{
    const ToneGrid g(4, 2.4e9, 10e6);
    for (double pathloss : {0.0, 30.0, 60.0})
    {
        const auto base = channels(2, g, 1, 12, pathloss);
        const std::vector<ChannelRealization> same(20, base[0]);
        const DiodeMomentModel model;
        const auto smf = smf_weights(base[0], SmfParams{});
        RandomStream rng(1);
        const auto book = train_lloyd(same, 1, model, LloydOptions{}, rng, Codebook({smf}, false));
        CHECK(dc(base[0], book[0], model) >= dc(base[0], smf, model) - 1e-9);
        CHECK(book[0].transmit_power() == Catch::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("Assignment picks the strictly better codeword", "[codebook]")
{
    const ToneGrid g(1, 2.4e9, 10e6);
    const ChannelRealization h(g, ComplexMatrix(2, 1, cplx(1.0, 0.0)));
    ComplexMatrix anti(2, 1, 1.0);
    anti(1, 0) = -1.0;
    // Codeword 1 cancels at the receiver, codeword 2 adds coherently.
    const Codebook book({WaveformWeights::on_power_sphere(anti, 2.0), up_weights(2, g, 2.0)}, false);
    const auto t = kernels::dc_table(std::vector<ChannelRealization>{h}, book.entries(), DiodeMomentModel{},
                                     Execution::serial);
    CHECK(kernels::best_codeword(t, Execution::serial)[0] == 1);
}

TEST_CASE("Lloyd objective is non-decreasing and codewords stay on the sphere", "[codebook][property]")
{
    const ToneGrid g(4, 2.4e9, 10e6);
    for (double pathloss : {20.0, 60.0})
    {
        const auto train = channels(2, g, 200, 13, pathloss);
        LloydOptions opt;
        opt.iters = 20;
        LloydTrace trace;
        RandomStream rng(2);
        const auto book = train_lloyd(train, 8, DiodeMomentModel{}, opt, rng, {}, &trace);
        REQUIRE(trace.objective.size() >= 2);
        for (std::size_t i = 1; i < trace.objective.size(); ++i)
            CHECK(trace.objective[i] >= trace.objective[i - 1]);
        for (const auto &w : book.entries())
            CHECK(w.transmit_power() == Catch::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("Lloyd training is deterministic across execution modes", "[codebook]")
{
    const ToneGrid g(2, 2.4e9, 10e6);
    const auto train = channels(2, g, 64, 14);
    LloydOptions serial;
    serial.iters = 5;
    serial.exec = Execution::serial;
    LloydOptions parallel = serial;
    parallel.exec = Execution::parallel;
    RandomStream a(7), b(7);
    CHECK(train_lloyd(train, 4, DiodeMomentModel{}, serial, a) == train_lloyd(train, 4, DiodeMomentModel{}, parallel, b));
}

TEST_CASE("Lloyd argument validation", "[codebook]")
{
    const ToneGrid g(2, 2.4e9, 10e6);
    const auto train = channels(1, g, 3, 15);
    RandomStream rng(1);
    CHECK_THROWS_AS(train_lloyd(train, 4, DiodeMomentModel{}, LloydOptions{}, rng), DomainError);
    LloydOptions zero;
    zero.iters = 0;
    CHECK_THROWS_AS(train_lloyd(train, 2, DiodeMomentModel{}, zero, rng), DomainError);
}

TEST_CASE("Codebook file round trip and corruption", "[codebook]")
{
    const auto dir = std::filesystem::temp_directory_path() / "wpt_test_codebook";
    std::filesystem::create_directories(dir);
    const ToneGrid g(4, 2.4e9, 10e6);
    RandomStream rng(8);
    const auto book = gen_nested(3, g, 2.0, 8, rng);
    save_codebook(book, dir / "cb.txt");
    const auto back = load_codebook(dir / "cb.txt");
    CHECK(back == book);
    CHECK(back.provenance() == book.provenance());
    CHECK(back.nested());

    const std::string text = slurp(dir / "cb.txt");
    {
        std::ofstream(dir / "trunc.txt", std::ios::binary) << text.substr(0, text.size() / 2);
        std::string v2 = text;
        v2.replace(v2.find("v1"), 2, "v9");
        std::ofstream(dir / "ver.txt", std::ios::binary) << v2;
        std::ofstream(dir / "extra.txt", std::ios::binary) << text << "1 1 0 0\n";
    }
    CHECK_THROWS_AS(load_codebook(dir / "trunc.txt"), LoadError);
    CHECK_THROWS_AS(load_codebook(dir / "ver.txt"), LoadError);
    CHECK_THROWS_AS(load_codebook(dir / "extra.txt"), LoadError);
    try
    {
        load_codebook(dir / "ver.txt");
    }
    catch (const LoadError &e)
    {
        CHECK(e.line() == 1);
    }
    std::filesystem::remove_all(dir);
}
