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

#include "wpt/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "wpt/codebook.hpp"
#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"
#include "wpt/strategies.hpp"
#include "wpt/textio.hpp"

namespace wpt
{

const char *strategy_name(Strategy s) noexcept
{
    switch (s)
    {
    case Strategy::up:
        return "UP";
    case Strategy::smf:
        return "SMF";
    case Strategy::limited:
        return "LIMITED";
    }
    return "?";
}

Strategy parse_strategy(const std::string &name)
{
    std::string u = name;
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (u == "UP")
        return Strategy::up;
    if (u == "SMF")
        return Strategy::smf;
    if (u == "LIMITED" || u == "LF")
        return Strategy::limited;
    throw ConfigError("unknown strategy '" + name + "' (expected UP, SMF or LIMITED)");
}

namespace
{
CodebookKind parse_codebook_kind(const std::string &s)
{
    if (s == "nested-lloyd")
        return CodebookKind::nested_lloyd;
    if (s == "lloyd")
        return CodebookKind::lloyd;
    if (s == "nested-random")
        return CodebookKind::nested_random;
    if (s == "random")
        return CodebookKind::random;
    throw ConfigError("unknown codebook kind '" + s + "' (expected nested-lloyd, lloyd, nested-random or random)");
}

bool is_nested(CodebookKind k) noexcept
{
    return k == CodebookKind::nested_lloyd || k == CodebookKind::nested_random;
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
} // namespace

void CampaignConfig::validate() const
{
    if (strategies.empty())
        throw ConfigError("campaign: strategies must not be empty");
    if (antenna_counts.empty())
        throw ConfigError("campaign: antennas must not be empty");
    if (tone_counts.empty())
        throw ConfigError("campaign: tones must not be empty");
    const bool limited = std::find(strategies.begin(), strategies.end(), Strategy::limited) != strategies.end();
    if (limited && codebook_sizes.empty())
        throw ConfigError("campaign: codebook_sizes must not be empty when LIMITED is swept");
    for (auto m : antenna_counts)
        if (m < 1)
            throw ConfigError("campaign: antenna counts must be positive");
    for (auto n : tone_counts)
        if (n < 1)
            throw ConfigError("campaign: tone counts must be positive");
    for (auto k : codebook_sizes)
    {
        if (k < 1)
            throw ConfigError("campaign: codebook sizes must be positive");
        if (is_nested(codebook_kind) && (k & (k - 1)) != 0)
            throw ConfigError("campaign: nested codebooks need power-of-two sizes, got " + std::to_string(k));
        FrameConfig(t_s, t_frame, k); // throws if K T_s >= T
    }
    if (frames_per_location < 1)
        throw ConfigError("campaign: frames_per_location must be at least 1");
    if (locations < 1)
        throw ConfigError("channel: locations must be at least 1");
    if (!(center_frequency_hz > 0.0) || !(bandwidth_hz > 0.0))
        throw ConfigError("signal: frequencies must be positive");
    if (!(power_w > 0.0))
        throw ConfigError("signal: power_w must be positive");
    if (!(pathloss_min_db <= pathloss_max_db))
        throw ConfigError("channel: pathloss_min_db exceeds pathloss_max_db");
    channel.validate();
    diode.validate();
    if (adc_enabled)
        adc.validate();
    link.validate();
    SmfParams{smf_beta, power_w}.validate();
    if (limited && !(codebook_kind == CodebookKind::random || codebook_kind == CodebookKind::nested_random))
    {
        const auto kmax = *std::max_element(codebook_sizes.begin(), codebook_sizes.end());
        if (training_size < kmax)
            throw ConfigError("codebook: training_size must be at least the largest codebook size");
        if (training_iters < 1)
            throw ConfigError("codebook: iters must be at least 1");
    }
}

CampaignConfig parse_campaign_config(const IniFile &ini)
{
    CampaignConfig c;
    auto to_sizes = [](const std::vector<long long> &v, const char *what) {
        std::vector<std::size_t> out;
        for (long long x : v)
        {
            if (x < 1)
                throw ConfigError(std::string("campaign: ") + what + " must be positive");
            out.push_back(static_cast<std::size_t>(x));
        }
        return out;
    };

    if (auto v = ini.get_int("campaign", "seed"))
        c.seed = static_cast<std::uint64_t>(*v);
    if (auto v = ini.get_string_list("campaign", "strategies"))
    {
        c.strategies.clear();
        for (const auto &s : *v)
            c.strategies.push_back(parse_strategy(s));
    }
    if (auto v = ini.get_int_list("campaign", "antennas"))
        c.antenna_counts = to_sizes(*v, "antennas");
    if (auto v = ini.get_int_list("campaign", "tones"))
        c.tone_counts = to_sizes(*v, "tones");
    if (auto v = ini.get_int_list("campaign", "codebook_sizes"))
        c.codebook_sizes = to_sizes(*v, "codebook_sizes");
    if (auto v = ini.get_int("campaign", "frames_per_location"))
    {
        if (*v < 1)
            throw ConfigError("campaign: frames_per_location must be at least 1");
        c.frames_per_location = static_cast<std::size_t>(*v);
    }
    if (auto v = ini.get_int("campaign", "threads"))
        c.threads = static_cast<int>(*v);

    if (auto v = ini.get_double("signal", "center_frequency_hz"))
        c.center_frequency_hz = *v;
    if (auto v = ini.get_double("signal", "bandwidth_hz"))
        c.bandwidth_hz = *v;
    if (auto v = ini.get_double("signal", "power_w"))
        c.power_w = *v;

    if (auto v = ini.get_int("channel", "locations"))
    {
        if (*v < 1)
            throw ConfigError("channel: locations must be at least 1");
        c.locations = static_cast<std::size_t>(*v);
    }
    if (auto v = ini.get_int("channel", "n_taps"))
    {
        if (*v < 1)
            throw ConfigError("channel: n_taps must be at least 1");
        c.channel.n_taps = static_cast<std::size_t>(*v);
    }
    if (auto v = ini.get_double("channel", "tap_spacing_s"))
        c.channel.tap_spacing = *v;
    if (auto v = ini.get_double("channel", "pdp_decay"))
        c.channel.pdp_decay = *v;
    if (auto v = ini.get_double("channel", "pathloss_min_db"))
        c.pathloss_min_db = *v;
    if (auto v = ini.get_double("channel", "pathloss_max_db"))
        c.pathloss_max_db = *v;
    if (auto v = ini.get_bool("channel", "resample_per_frame"))
        c.resample_per_frame = *v;
    c.channel.pathloss_db = 0.5 * (c.pathloss_min_db + c.pathloss_max_db);

    if (auto v = ini.get_string("rectifier", "model"))
    {
        if (*v == "table")
        {
            const auto path = ini.get_string("rectifier", "table_path");
            if (!path)
                throw ConfigError("rectifier: model = table requires table_path");
            c.efficiency_table = *path;
        }
        else if (*v != "moment")
            throw ConfigError("rectifier: model must be 'moment' or 'table', got '" + *v + "'");
    }
    else if (ini.get_string("rectifier", "table_path"))
        throw ConfigError("rectifier: table_path given without model = table");
    if (auto v = ini.get_double("rectifier", "k2"))
        c.diode.k2 = *v;
    if (auto v = ini.get_double("rectifier", "k4"))
        c.diode.k4 = *v;
    if (auto v = ini.get_double("rectifier", "alpha"))
        c.diode.alpha = *v;

    if (auto v = ini.get_bool("adc", "enabled"))
        c.adc_enabled = *v;
    if (auto v = ini.get_int("adc", "bits"))
        c.adc.resolution_bits = static_cast<int>(*v);
    if (auto v = ini.get_double("adc", "v_ref"))
        c.adc.v_ref = *v;
    if (auto v = ini.get_double("adc", "noise_sigma"))
        c.adc.noise_sigma = *v;
    if (auto v = ini.get_double("adc", "load_ohms"))
        c.adc.load_resistance = *v;

    if (auto v = ini.get_double("link", "delivery_probability"))
        c.link.delivery_probability = *v;
    if (auto v = ini.get_double("link", "latency_s"))
        c.link.latency = *v;

    if (auto v = ini.get_double("frame", "t_s"))
        c.t_s = *v;
    if (auto v = ini.get_double("frame", "t_frame"))
        c.t_frame = *v;

    if (auto v = ini.get_double("smf", "beta"))
        c.smf_beta = *v;

    if (auto v = ini.get_string("codebook", "kind"))
        c.codebook_kind = parse_codebook_kind(*v);
    if (auto v = ini.get_int("codebook", "training_size"))
    {
        if (*v < 1)
            throw ConfigError("codebook: training_size must be positive");
        c.training_size = static_cast<std::size_t>(*v);
    }
    if (auto v = ini.get_int("codebook", "iters"))
    {
        if (*v < 1)
            throw ConfigError("codebook: iters must be positive");
        c.training_iters = static_cast<std::size_t>(*v);
    }
    if (auto v = ini.get_int("codebook", "ascent_steps"))
    {
        if (*v < 1)
            throw ConfigError("codebook: ascent_steps must be positive");
        c.ascent_steps = static_cast<std::size_t>(*v);
    }

    if (auto v = ini.get_string("output", "dir"))
        c.output_dir = *v;

    ini.reject_unused();
    c.validate();
    return c;
}

CampaignConfig load_campaign_config(const std::filesystem::path &path)
{
    CampaignConfig c = parse_campaign_config(IniFile::load(path));
    // Table paths are relative to the config file.
    if (!c.efficiency_table.empty() && c.efficiency_table.is_relative())
        c.efficiency_table = path.parent_path() / c.efficiency_table;
    return c;
}

CampaignConfig preset_config(const std::string &name)
{
    CampaignConfig c;
    c.frames_per_location = 2;
    c.training_size = 1000;
    if (name == "figure-bf")
    {
        c.antenna_counts = {1, 2, 4};
        c.tone_counts = {1};
    }
    else if (name == "figure-wf")
    {
        c.antenna_counts = {1};
        c.tone_counts = {1, 2, 4, 8};
    }
    else if (name == "figure-joint")
    {
        c.antenna_counts = {2, 4};
        c.tone_counts = {1, 2, 4, 8};
    }
    else
        throw ConfigError("unknown sweep '" + name + "' (expected figure-bf, figure-wf or figure-joint)");
    c.output_dir = name;
    return c;
}

double db_gain(double p, double p_ref)
{
    if (!(p > 0.0) || !(p_ref > 0.0))
        throw DomainError("db_gain: powers must be positive (got " + textio::format_sig(p) + ", " +
                          textio::format_sig(p_ref) + ")");
    return 10.0 * std::log10(p / p_ref);
}

namespace
{

struct SweepPoint
{
    Strategy strategy;
    std::size_t m;
    std::size_t n;
    std::size_t k; // 0 for UP and SMF

    auto key() const { return std::make_tuple(std::string(strategy_name(strategy)), m, n, k); }
};

struct DetailRow
{
    std::string strategy;
    std::size_t m = 0, n = 0, k = 0;
    std::size_t location = 0; // 1-based
    std::size_t frame = 0;    // 1-based
    double p_dc = 0.0, p_rf = 0.0;
    std::size_t selected_k = 0, applied_k = 0;
    bool feedback_ok = true;
    double e_train = 0.0, e_wpt = 0.0;
};

std::string format_row(const DetailRow &r)
{
    std::string s;
    s += r.strategy;
    s += ',' + std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.k);
    s += ",L" + std::to_string(r.location) + ',' + std::to_string(r.frame);
    s += ',' + textio::format_sig(r.p_dc) + ',' + textio::format_sig(r.p_rf);
    s += ',' + std::to_string(r.selected_k) + ',' + std::to_string(r.applied_k) + ',' + (r.feedback_ok ? "1" : "0");
    s += ',' + textio::format_sig(r.e_train) + ',' + textio::format_sig(r.e_wpt);
    return s;
}

// Training channels for codebook design: independent draws of the location
// distribution, shared between all (M, N) so sweeps stay coupled.
std::vector<ChannelRealization> training_channels(const CampaignConfig &cfg, std::size_t m, const ToneGrid &grid)
{
    std::vector<ChannelRealization> out;
    out.reserve(cfg.training_size);
    const RandomStream root = RandomStream(cfg.seed).split(StreamPurpose::training_set);
    for (std::size_t i = 0; i < cfg.training_size; ++i)
    {
        RandomStream rng = root.split({i});
        ChannelModelParams p = cfg.channel;
        p.pathloss_db = rng.uniform(cfg.pathloss_min_db, cfg.pathloss_max_db);
        out.push_back(frequency_response(sample_taps(p, m, rng), p, grid));
    }
    return out;
}

using CodebookKey = std::tuple<std::size_t, std::size_t, std::size_t>; // M, N, K (K = 0: nested family)

std::map<CodebookKey, Codebook> prepare_codebooks(const CampaignConfig &cfg, const std::vector<SweepPoint> &points)
{
    std::map<CodebookKey, Codebook> books;
    const std::size_t k_max = *std::max_element(cfg.codebook_sizes.begin(), cfg.codebook_sizes.end());
    std::size_t k_family = 1;
    while (k_family < k_max)
        k_family *= 2;

    LloydOptions opt;
    opt.iters = cfg.training_iters;
    opt.ascent_steps = cfg.ascent_steps;
    opt.power = cfg.power_w;
    opt.exec = Execution::parallel;

    for (const SweepPoint &pt : points)
    {
        if (pt.strategy != Strategy::limited)
            continue;
        const ToneGrid grid(pt.n, cfg.center_frequency_hz, cfg.bandwidth_hz);
        const CodebookKey key{pt.m, pt.n, is_nested(cfg.codebook_kind) ? 0 : pt.k};
        if (books.count(key))
            continue;
        RandomStream rng = RandomStream(cfg.seed).split({static_cast<std::uint64_t>(StreamPurpose::codebook), pt.m,
                                                         pt.n, std::get<2>(key)});
        switch (cfg.codebook_kind)
        {
        case CodebookKind::nested_lloyd:
            books.emplace(key, train_nested_lloyd(training_channels(cfg, pt.m, grid), k_family, cfg.diode, opt, rng));
            break;
        case CodebookKind::lloyd:
            books.emplace(key, train_lloyd(training_channels(cfg, pt.m, grid), pt.k, cfg.diode, opt, rng));
            break;
        case CodebookKind::nested_random:
            books.emplace(key, gen_nested(pt.m, grid, cfg.power_w, k_family, rng));
            break;
        case CodebookKind::random:
            books.emplace(key, gen_random(pt.m, grid, cfg.power_w, pt.k, rng));
            break;
        }
    }
    return books;
}

std::vector<DetailRow> simulate_item(const CampaignConfig &cfg, const SweepPoint &pt, const Location &loc,
                                     std::size_t loc_index, const RectifierModel &model,
                                     const std::map<CodebookKey, Codebook> &books)
{
    const ToneGrid grid(pt.n, cfg.center_frequency_hz, cfg.bandwidth_hz);
    auto channel_at = [&](std::uint64_t frame) {
        return realize_channel(loc, pt.m, grid, cfg.resample_per_frame ? frame : 0);
    };

    std::vector<DetailRow> rows;
    rows.reserve(cfg.frames_per_location);
    DetailRow base;
    base.strategy = strategy_name(pt.strategy);
    base.m = pt.m;
    base.n = pt.n;
    base.k = pt.k;
    base.location = loc_index + 1;

    if (pt.strategy == Strategy::limited)
    {
        const Codebook &family = books.at({pt.m, pt.n, is_nested(cfg.codebook_kind) ? 0 : pt.k});
        const Codebook cb = family.size() == pt.k ? family : family.prefix(pt.k);
        const FrameConfig fc(cfg.t_s, cfg.t_frame, pt.k);
        const std::optional<AdcConfig> adc = cfg.adc_enabled ? std::optional<AdcConfig>(cfg.adc) : std::nullopt;
        const RandomStream rng = RandomStream(loc.params.seed).split({0x5E55u, pt.m, pt.n, pt.k});
        const auto reports = run_session(fc, cb, channel_at, model, adc, cfg.link, cfg.frames_per_location, rng);
        for (const FrameReport &r : reports)
        {
            DetailRow row = base;
            row.frame = r.frame_id + 1;
            row.p_dc = r.p_dc_wpt;
            row.p_rf = r.p_rf_wpt;
            row.selected_k = r.selected_index + 1;
            row.applied_k = r.applied_index ? *r.applied_index + 1 : 0;
            row.feedback_ok = r.feedback_delivered;
            row.e_train = r.energy_training;
            row.e_wpt = r.energy_wpt;
            rows.push_back(row);
        }
        return rows;
    }

    for (std::uint64_t f = 0; f < cfg.frames_per_location; ++f)
    {
        const ChannelRealization ch = channel_at(f);
        const WaveformWeights w = pt.strategy == Strategy::up ? up_weights(pt.m, grid, cfg.power_w)
                                                               : smf_weights(ch, SmfParams{cfg.smf_beta, cfg.power_w});
        const EffectiveTones tones = effective_tones(ch, w);
        DetailRow row = base;
        row.frame = f + 1;
        row.p_dc = dc_power(model, tones, grid);
        row.p_rf = received_rf_power(tones);
        row.e_wpt = row.p_dc * cfg.t_frame;
        rows.push_back(row);
    }
    return rows;
}

} // namespace

CampaignResult run_campaign(const CampaignConfig &config)
{
    config.validate();

    // Preflight: fail on an unwritable destination before any work.
    CampaignResult result;
    result.detail_csv = config.output_dir / "detail.csv";
    result.summary_csv = config.output_dir / "summary.csv";
    {
        std::error_code ec;
        std::filesystem::create_directories(config.output_dir, ec);
        if (ec)
            throw IoError("cannot create output directory " + config.output_dir.string() + ": " + ec.message());
        for (const auto &p : {result.detail_csv, result.summary_csv})
        {
            std::ofstream probe(p, std::ios::binary | std::ios::trunc);
            if (!probe)
                throw IoError("cannot write " + p.string());
        }
    }

    const RectifierModel model = config.efficiency_table.empty()
                                     ? RectifierModel(config.diode)
                                     : RectifierModel(EfficiencyTableModel::load_csv(config.efficiency_table));

    std::vector<SweepPoint> points;
    for (Strategy s : sorted_unique(config.strategies))
        for (std::size_t m : sorted_unique(config.antenna_counts))
            for (std::size_t n : sorted_unique(config.tone_counts))
            {
                if (s == Strategy::limited)
                    for (std::size_t k : sorted_unique(config.codebook_sizes))
                        points.push_back({s, m, n, k});
                else
                    points.push_back({s, m, n, 0});
            }
    const SweepPoint baseline{Strategy::up, 1, 1, 0};
    if (std::none_of(points.begin(), points.end(), [&](const SweepPoint &p) { return p.key() == baseline.key(); }))
        points.push_back(baseline);
    std::sort(points.begin(), points.end(), [](const SweepPoint &a, const SweepPoint &b) { return a.key() < b.key(); });

    if (config.threads > 0)
        kernels::set_threads(config.threads);

    const auto books = prepare_codebooks(config, points);
    const auto locations = make_locations(config.locations, config.seed, config.channel,
                                          {config.pathloss_min_db, config.pathloss_max_db});

    const std::size_t n_items = points.size() * locations.size();
    std::vector<std::vector<DetailRow>> per_item(n_items);
    std::vector<std::string> errors(n_items);
    const auto n_signed = static_cast<std::ptrdiff_t>(n_items);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n_signed; ++i)
    {
        const auto iu = static_cast<std::size_t>(i);
        const std::size_t p = iu / locations.size();
        const std::size_t l = iu % locations.size();
        try
        {
            per_item[iu] = simulate_item(config, points[p], locations[l], l, model, books);
        }
        catch (const std::exception &e)
        {
            errors[iu] = e.what();
        }
    }
    for (const auto &e : errors)
        if (!e.empty())
            throw Error("campaign: " + e);

    // Items are already in (point, location, frame) order.
    std::ostringstream detail;
    detail << kDetailHeader << '\n';
    for (const auto &rows : per_item)
        for (const DetailRow &r : rows)
        {
            detail << format_row(r) << '\n';
            ++result.detail_rows;
        }

    const std::string detail_text = detail.str();
    const std::string summary_text = summarize(detail_text);
    {
        std::ofstream out(result.detail_csv, std::ios::binary | std::ios::trunc);
        out << detail_text;
        if (!out)
            throw IoError("write failed for " + result.detail_csv.string());
    }
    {
        std::ofstream out(result.summary_csv, std::ios::binary | std::ios::trunc);
        out << summary_text;
        if (!out)
            throw IoError("write failed for " + result.summary_csv.string());
    }
    return result;
}

std::string summarize(const std::string &detail_csv)
{
    std::istringstream in(detail_csv);
    std::string line;
    if (!std::getline(in, line) || textio::trim(line) != kDetailHeader)
        throw SummaryError("summary: detail CSV header must be '" + std::string(kDetailHeader) + "'");

    // (strategy, M, N, K) -> location sort key -> frame -> p_dc
    using PointKey = std::tuple<std::string, long long, long long, long long>;
    using LocKey = std::pair<long long, std::string>; // numeric index of "L<i>", then label
    std::map<PointKey, std::map<LocKey, std::map<long long, double>>> groups;

    std::size_t lineno = 1;
    while (std::getline(in, line))
    {
        ++lineno;
        if (textio::trim(line).empty())
            continue;
        const auto f = textio::split(textio::trim(line), ',');
        if (f.size() != 13)
            throw SummaryError("summary: line " + std::to_string(lineno) + ": expected 13 fields");
        const auto m = textio::parse_int(f[1]);
        const auto n = textio::parse_int(f[2]);
        const auto k = textio::parse_int(f[3]);
        const auto frame = textio::parse_int(f[5]);
        const auto p = textio::parse_double(f[6]);
        if (!m || !n || !k || !frame || !p)
            throw SummaryError("summary: line " + std::to_string(lineno) + ": malformed number");
        const std::string label(f[4]);
        long long idx = std::numeric_limits<long long>::max();
        if (label.size() > 1 && label[0] == 'L')
            if (auto v = textio::parse_int(std::string_view(label).substr(1)))
                idx = *v;
        auto &frames = groups[{std::string(f[0]), *m, *n, *k}][{idx, label}];
        if (!frames.emplace(*frame, *p).second)
            throw SummaryError("summary: line " + std::to_string(lineno) + ": duplicate frame " +
                               std::to_string(*frame));
    }

    struct Mean
    {
        std::string location;
        double value;
    };
    std::map<PointKey, std::vector<Mean>> means;
    for (const auto &[pk, locs] : groups)
    {
        auto &out = means[pk];
        double acc_all = 0.0;
        for (const auto &[lk, frames] : locs)
        {
            double acc = 0.0;
            for (const auto &[fr, p] : frames)
                acc += p;
            const double mean = acc / static_cast<double>(frames.size());
            out.push_back({lk.second, mean});
            acc_all += mean;
        }
        out.push_back({"ALL", acc_all / static_cast<double>(locs.size())});
    }

    const PointKey base_key{"UP", 1, 1, 0};
    const auto base_it = means.find(base_key);
    if (base_it == means.end())
        throw SummaryError("summary: baseline sweep point UP,1,1,0 is missing");
    std::map<std::string, double> baseline;
    for (const Mean &mn : base_it->second)
        baseline[mn.location] = mn.value;

    std::ostringstream out;
    out << kSummaryHeader << '\n';
    for (const auto &[pk, rows] : means)
        for (const Mean &mn : rows)
        {
            const auto b = baseline.find(mn.location);
            if (b == baseline.end())
                throw SummaryError("summary: baseline row UP,1,1,0," + mn.location + " is missing");
            const double gain = pk == base_key ? 0.0 : db_gain(mn.value, b->second);
            out << std::get<0>(pk) << ',' << std::get<1>(pk) << ',' << std::get<2>(pk) << ',' << std::get<3>(pk)
                << ',' << mn.location << ',' << textio::format_sig(mn.value) << ',' << textio::format_fixed(gain, 4)
                << '\n';
        }
    return out.str();
}

} // namespace wpt
