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

#ifndef WPT_HARNESS_HPP_
#define WPT_HARNESS_HPP_

// Campaign runner: sweeps strategy x M x N x K over a set of transmitter
// locations and writes deterministic detail and summary CSV files.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wpt/channel.hpp"
#include "wpt/config.hpp"
#include "wpt/protocol.hpp"
#include "wpt/rectenna.hpp"

namespace wpt
{

enum class Strategy
{
    up,
    smf,
    limited,
};

const char *strategy_name(Strategy s) noexcept;
Strategy parse_strategy(const std::string &name);

enum class CodebookKind
{
    nested_lloyd,  // one nested Lloyd-trained family per (M, N)
    lloyd,         // independent Lloyd training per (M, N, K)
    nested_random, // gen_nested per (M, N)
    random,        // gen_random per (M, N, K)
};

struct CampaignConfig
{
    std::uint64_t seed = 1;
    std::vector<Strategy> strategies{Strategy::up, Strategy::smf, Strategy::limited};
    std::vector<std::size_t> antenna_counts{1, 2, 4};
    std::vector<std::size_t> tone_counts{1, 2, 4, 8};
    std::vector<std::size_t> codebook_sizes{2, 4, 8, 16, 32, 64};
    std::size_t frames_per_location = 4;
    int threads = 0; // 0: OpenMP default

    double center_frequency_hz = 2.4e9;
    double bandwidth_hz = 10e6;
    double power_w = 2.0;

    std::size_t locations = 15;
    ChannelModelParams channel{};
    double pathloss_min_db = 55.0;
    double pathloss_max_db = 70.0;
    bool resample_per_frame = true;

    // Rectifier: moment model unless a table path is given.
    DiodeMomentModel diode{};
    std::filesystem::path efficiency_table;

    bool adc_enabled = false;
    AdcConfig adc{};

    LinkModel link{};
    double t_s = 0.010;
    double t_frame = 2.0;
    double smf_beta = 3.0;

    CodebookKind codebook_kind = CodebookKind::nested_lloyd;
    std::size_t training_size = 1000;
    std::size_t training_iters = 30;
    std::size_t ascent_steps = 10;

    std::filesystem::path output_dir = "out";

    // Throws ConfigError on an empty sweep axis or an invalid value.
    void validate() const;
};

// Parses the INI schema documented in README.md; unknown sections or keys
// are rejected with their line number.
CampaignConfig parse_campaign_config(const IniFile &ini);
CampaignConfig load_campaign_config(const std::filesystem::path &path);

// Pre-canned sweeps mirroring the beamforming-only, waveform-only and joint
// experiments: "figure-bf", "figure-wf", "figure-joint".
CampaignConfig preset_config(const std::string &name);

struct CampaignResult
{
    std::filesystem::path detail_csv;
    std::filesystem::path summary_csv;
    std::size_t detail_rows = 0;
};

inline constexpr const char *kDetailHeader =
    "strategy,M,N,K,location,frame,p_dc_w,p_rf_w,selected_k,applied_k,feedback_ok,e_train_j,e_wpt_j";
inline constexpr const char *kSummaryHeader = "strategy,M,N,K,location,p_dc_mean_w,gain_db";

// Runs every sweep point at every location and writes detail.csv and
// summary.csv into config.output_dir. The (UP, 1, 1) baseline point is
// always simulated. Throws IoError before simulating if the output cannot
// be written.
CampaignResult run_campaign(const CampaignConfig &config);

// Detail CSV text -> summary CSV text. Frame means per (point, location),
// then a location "ALL" row per point averaging the location means. Gains
// are against the (UP, 1, 1) row with the same location. Output does not
// depend on input row order.
std::string summarize(const std::string &detail_csv);

// 10 log10(p / p_ref); both must be positive.
double db_gain(double p, double p_ref);

} // namespace wpt

#endif
