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

// wptsim: command-line front end for campaigns, codebooks and the moment
// oracle. Exit codes: 0 success, 1 configuration or runtime error, 2 usage.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wpt/codebook.hpp"
#include "wpt/errors.hpp"
#include "wpt/harness.hpp"
#include "wpt/kernels.hpp"
#include "wpt/oracle.hpp"
#include "wpt/textio.hpp"

namespace
{

struct CodebookArgs
{
    std::string out;
    std::size_t antennas = 1;
    std::size_t tones = 1;
    std::size_t size = 8;
    double power = 2.0;
    double center = 2.4e9;
    double bandwidth = 10e6;
    std::uint64_t seed = 1;
    bool random = false;
    bool nested = false;
    std::size_t training = 1000;
    std::size_t iters = 30;
    double pathloss_min = 55.0;
    double pathloss_max = 70.0;
};

void add_codebook_options(CLI::App *cmd, CodebookArgs &a)
{
    cmd->add_option("--out", a.out, "Output codebook file")->required();
    cmd->add_option("--antennas,-M", a.antennas, "Transmit antennas")->check(CLI::PositiveNumber);
    cmd->add_option("--tones,-N", a.tones, "Tones")->check(CLI::PositiveNumber);
    cmd->add_option("--size,-K", a.size, "Codewords")->check(CLI::PositiveNumber);
    cmd->add_option("--power", a.power, "Transmit power budget in watts")->check(CLI::PositiveNumber);
    cmd->add_option("--center-frequency", a.center, "Carrier in Hz");
    cmd->add_option("--bandwidth", a.bandwidth, "Bandwidth in Hz");
    cmd->add_option("--seed", a.seed, "Seed");
}

int run_codebook_gen(const CodebookArgs &a)
{
    const wpt::ToneGrid grid(a.tones, a.center, a.bandwidth);
    wpt::RandomStream rng = wpt::RandomStream(a.seed).split(wpt::StreamPurpose::codebook);
    const wpt::Codebook cb = a.random ? wpt::gen_random(a.antennas, grid, a.power, a.size, rng)
                                      : wpt::gen_nested(a.antennas, grid, a.power, a.size, rng);
    wpt::save_codebook(cb, a.out);
    std::cout << "wrote " << cb.size() << " codewords to " << a.out << '\n';
    return 0;
}

int run_codebook_train(const CodebookArgs &a)
{
    const wpt::ToneGrid grid(a.tones, a.center, a.bandwidth);
    const wpt::RandomStream root(a.seed);
    wpt::ChannelModelParams params;
    std::vector<wpt::ChannelRealization> training;
    training.reserve(a.training);
    for (std::size_t i = 0; i < a.training; ++i)
    {
        wpt::RandomStream rng = root.split(wpt::StreamPurpose::training_set, i);
        params.pathloss_db = rng.uniform(a.pathloss_min, a.pathloss_max);
        training.push_back(wpt::frequency_response(wpt::sample_taps(params, a.antennas, rng), params, grid));
    }
    wpt::LloydOptions opt;
    opt.iters = a.iters;
    opt.power = a.power;
    wpt::RandomStream rng = root.split(wpt::StreamPurpose::codebook);
    const wpt::DiodeMomentModel model;
    wpt::LloydTrace trace;
    const wpt::Codebook cb = a.nested ? wpt::train_nested_lloyd(training, a.size, model, opt, rng)
                                      : wpt::train_lloyd(training, a.size, model, opt, rng, {}, &trace);
    wpt::save_codebook(cb, a.out);
    std::cout << "wrote " << cb.size() << " codewords to " << a.out;
    if (!a.nested)
        std::cout << " after " << trace.iterations_run << " iterations, mean training dc power "
                  << wpt::textio::format_sig(trace.objective.back()) << " W";
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Closed-loop wireless power transfer simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    int threads = 0;
    auto *simulate = app.add_subcommand("simulate", "Run a campaign described by a config file");
    simulate->add_option("--config", config_path, "Campaign config (INI)")->required();
    simulate->add_option("--out", out_dir, "Output directory (overrides [output] dir)");
    simulate->add_option("--threads", threads, "Worker threads (0: default)");

    CodebookArgs gen_args, train_args;
    auto *codebook = app.add_subcommand("codebook", "Generate or train codebooks");
    codebook->require_subcommand(1);
    auto *gen = codebook->add_subcommand("gen", "Random or nested codebook");
    add_codebook_options(gen, gen_args);
    gen->add_flag("--random", gen_args.random, "Independent random codewords instead of a nested family");
    auto *train = codebook->add_subcommand("train", "Lloyd-trained codebook on the moment model");
    add_codebook_options(train, train_args);
    train->add_flag("--nested", train_args.nested, "Train a nested family (K must be a power of two)");
    train->add_option("--training", train_args.training, "Training channels")->check(CLI::PositiveNumber);
    train->add_option("--iters", train_args.iters, "Lloyd iterations")->check(CLI::PositiveNumber);
    train->add_option("--pathloss-min", train_args.pathloss_min, "Lower pathloss in dB");
    train->add_option("--pathloss-max", train_args.pathloss_max, "Upper pathloss in dB");

    std::uint64_t oracle_seed = 1;
    std::size_t oracle_cases = 100;
    auto *oracle = app.add_subcommand("oracle", "Independent reference checks");
    oracle->require_subcommand(1);
    auto *moments = oracle->add_subcommand("moments", "Closed-form vs time-domain waveform moments");
    moments->add_option("--seed", oracle_seed, "Seed");
    moments->add_option("--cases", oracle_cases, "Random cases")->check(CLI::PositiveNumber);

    std::string sweep_name, sweep_out;
    std::size_t sweep_frames = 0, sweep_locations = 0;
    std::uint64_t sweep_seed = 1;
    auto *sweep = app.add_subcommand("sweep", "Pre-canned campaigns");
    sweep->add_option("name", sweep_name, "figure-bf, figure-wf or figure-joint")
        ->required()
        ->check(CLI::IsMember({"figure-bf", "figure-wf", "figure-joint"}));
    sweep->add_option("--out", sweep_out, "Output directory (default: ./<name>)");
    sweep->add_option("--frames", sweep_frames, "Frames per location");
    sweep->add_option("--locations", sweep_locations, "Number of locations");
    sweep->add_option("--seed", sweep_seed, "Seed");
    sweep->add_option("--threads", threads, "Worker threads (0: default)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (simulate->parsed())
        {
            wpt::CampaignConfig cfg = wpt::load_campaign_config(config_path);
            if (!out_dir.empty())
                cfg.output_dir = out_dir;
            if (threads > 0)
                cfg.threads = threads;
            const auto res = wpt::run_campaign(cfg);
            std::cout << "wrote " << res.detail_rows << " rows to " << res.detail_csv.string() << " and "
                      << res.summary_csv.string() << '\n';
            return 0;
        }
        if (gen->parsed())
            return run_codebook_gen(gen_args);
        if (train->parsed())
            return run_codebook_train(train_args);
        if (moments->parsed())
        {
            const auto chk = wpt::oracle::check_moments(oracle_seed, oracle_cases);
            std::printf("cases %zu  max rel err m2 %.3e  m4 %.3e  max %.3e\n", chk.cases, chk.max_rel_err_m2,
                        chk.max_rel_err_m4, chk.max_rel_err());
            return chk.max_rel_err() < 1e-6 ? 0 : 1;
        }
        if (sweep->parsed())
        {
            wpt::CampaignConfig cfg = wpt::preset_config(sweep_name);
            cfg.seed = sweep_seed;
            if (!sweep_out.empty())
                cfg.output_dir = sweep_out;
            if (sweep_frames > 0)
                cfg.frames_per_location = sweep_frames;
            if (sweep_locations > 0)
                cfg.locations = sweep_locations;
            if (threads > 0)
                cfg.threads = threads;
            const auto res = wpt::run_campaign(cfg);
            std::cout << "wrote " << res.detail_rows << " rows to " << res.detail_csv.string() << " and "
                      << res.summary_csv.string() << '\n';
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
