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

#include "wpt/protocol.hpp"

#include <cmath>

#include "wpt/errors.hpp"
#include "wpt/strategies.hpp"
#include "wpt/textio.hpp"

namespace wpt
{

FrameConfig::FrameConfig(double t_s, double t_frame, std::size_t k_codewords)
    : t_s_(t_s), t_frame_(t_frame), k_(k_codewords)
{
    if (!(t_s > 0.0) || !std::isfinite(t_s))
        throw ConfigError("frame: t_s must be positive");
    if (k_codewords < 1)
        throw ConfigError("frame: K must be at least 1");
    if (!(t_training() < t_frame) || !std::isfinite(t_frame))
        throw ConfigError("frame: training phase K*T_s = " + textio::format_sig(t_training()) +
                          " s does not fit in the frame T = " + textio::format_sig(t_frame) + " s");
}

FeedbackMsg encode_feedback(std::size_t k_star, std::size_t k_codewords, std::uint64_t frame_id)
{
    if (k_star >= k_codewords)
        throw DomainError("encode_feedback: index " + std::to_string(k_star) + " out of range for K = " +
                          std::to_string(k_codewords));
    const unsigned bits = feedback_bits(k_codewords);
    FeedbackMsg msg{frame_id, std::vector<std::uint8_t>(bits)};
    for (unsigned b = 0; b < bits; ++b)
        msg.index_bits[b] = static_cast<std::uint8_t>((k_star >> (bits - 1 - b)) & 1u);
    return msg;
}

std::size_t decode_feedback(const FeedbackMsg &msg, std::size_t k_codewords)
{
    const unsigned bits = feedback_bits(k_codewords);
    if (msg.index_bits.size() != bits)
        throw ProtocolError("decode_feedback: got " + std::to_string(msg.index_bits.size()) + " bits, K = " +
                            std::to_string(k_codewords) + " needs " + std::to_string(bits));
    std::size_t k = 0;
    for (std::uint8_t b : msg.index_bits)
    {
        if (b > 1)
            throw ProtocolError("decode_feedback: bit value out of range");
        k = (k << 1) | b;
    }
    if (k >= k_codewords)
        throw ProtocolError("decode_feedback: index " + std::to_string(k) + " out of range for K = " +
                            std::to_string(k_codewords));
    return k;
}

void LinkModel::validate() const
{
    if (!(delivery_probability >= 0.0 && delivery_probability <= 1.0))
        throw ConfigError("link: delivery_probability must lie in [0, 1]");
    if (!(latency >= 0.0) || !std::isfinite(latency))
        throw ConfigError("link: latency must be non-negative");
}

TrainingSweep run_training(const Codebook &codebook, const ChannelRealization &channel,
                           const RectifierModel &model, const std::optional<AdcConfig> &adc, RandomStream &rng)
{
    if (codebook.m_antennas() != channel.m_antennas() || codebook.n_tones() != channel.n_tones())
        throw DimensionError("run_training: codebook is " + std::to_string(codebook.m_antennas()) + "x" +
                             std::to_string(codebook.n_tones()) + ", channel is " +
                             std::to_string(channel.m_antennas()) + "x" + std::to_string(channel.n_tones()));
    if (adc)
        adc->validate();
    TrainingSweep sweep;
    sweep.measurements.reserve(codebook.size());
    sweep.dc_power.reserve(codebook.size());
    for (const auto &w : codebook.entries())
    {
        const double p = dc_power(model, effective_tones(channel, w), channel.grid());
        sweep.dc_power.push_back(p);
        sweep.measurements.push_back(adc ? measure_dc(*adc, p, rng).v_quantized : p);
    }
    return sweep;
}

FrameReport run_frame(const FrameConfig &config, const Codebook &codebook, const ChannelRealization &channel,
                      const RectifierModel &model, const std::optional<AdcConfig> &adc, const LinkModel &link,
                      FallbackState &fallback, RandomStream &rng, std::uint64_t frame_id)
{
    link.validate();
    if (codebook.size() != config.k_codewords())
        throw DimensionError("run_frame: codebook has " + std::to_string(codebook.size()) +
                             " codewords, frame configured for K = " + std::to_string(config.k_codewords()));
    const double t_p = config.t_p();
    if (!(link.latency < t_p))
        throw ConfigError("run_frame: feedback latency must be shorter than the WPT phase");

    RandomStream adc_rng = rng.split(StreamPurpose::adc_noise);
    RandomStream link_rng = rng.split(StreamPurpose::link);

    FrameReport r;
    r.frame_id = frame_id;
    r.t_p = t_p;

    const TrainingSweep sweep = run_training(codebook, channel, model, adc, adc_rng);
    r.measurements = sweep.measurements;
    r.selected_index = select_codeword(sweep.measurements);

    // K = 1 has nothing to report; the single codeword is used directly.
    if (codebook.size() == 1)
    {
        r.feedback_delivered = true;
    }
    else
    {
        const FeedbackMsg msg = encode_feedback(r.selected_index, codebook.size(), frame_id);
        const double u = link_rng.uniform();
        r.feedback_delivered = link.scripted.empty() ? u < link.delivery_probability
                                                     : link.scripted[frame_id % link.scripted.size()] != 0;
        if (r.feedback_delivered && decode_feedback(msg, codebook.size()) != r.selected_index)
            throw ProtocolError("run_frame: feedback round trip failed");
    }

    const std::optional<std::size_t> previous = fallback.applied;
    r.applied_index = r.feedback_delivered ? std::optional<std::size_t>(r.selected_index) : previous;

    auto powers_of = [&](const std::optional<std::size_t> &idx) {
        const WaveformWeights w =
            idx ? codebook[*idx] : up_weights(channel.m_antennas(), channel.grid(), codebook.power());
        const EffectiveTones tones = effective_tones(channel, w);
        return std::pair{dc_power(model, tones, channel.grid()), received_rf_power(tones)};
    };
    const auto [p_dc, p_rf] = powers_of(r.applied_index);
    r.p_dc_wpt = p_dc;
    r.p_rf_wpt = p_rf;

    double e_train = 0.0;
    for (double p : sweep.dc_power)
        e_train += p * config.t_s();
    r.energy_training = e_train;

    if (r.feedback_delivered && link.latency > 0.0 && previous != r.applied_index)
    {
        const double p_old = powers_of(previous).first;
        r.energy_wpt = p_old * link.latency + p_dc * (t_p - link.latency);
    }
    else
    {
        r.energy_wpt = p_dc * t_p;
    }
    r.energy_total = r.energy_training + r.energy_wpt;

    fallback.applied = r.applied_index;
    return r;
}

std::vector<FrameReport> run_session(const FrameConfig &config, const Codebook &codebook,
                                     const ChannelSource &channel_source, const RectifierModel &model,
                                     const std::optional<AdcConfig> &adc, const LinkModel &link, std::size_t n_frames,
                                     const RandomStream &rng)
{
    if (n_frames < 1)
        throw DomainError("run_session: n_frames must be at least 1");
    FallbackState fallback;
    std::vector<FrameReport> out;
    out.reserve(n_frames);
    for (std::uint64_t f = 0; f < n_frames; ++f)
    {
        RandomStream frame_rng = rng.split({f});
        out.push_back(run_frame(config, codebook, channel_source(f), model, adc, link, fallback, frame_rng, f));
    }
    return out;
}

} // namespace wpt
