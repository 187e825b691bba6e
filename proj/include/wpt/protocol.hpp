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

#ifndef WPT_PROTOCOL_HPP_
#define WPT_PROTOCOL_HPP_

// Closed-loop frame simulation: codebook sweep with dc measurement, index
// feedback over a lossy link, and the WPT phase with the selected codeword.
//
//   |<------------------------- T ------------------------->|
//   | s(1) | s(2) | ... | s(K) |  WPT with s(k*)            |
//   |<-------- K T_s -------->|<---------- T_p ------------>|
//                             ^ feedback of ceil(log2 K) bits

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wpt/channel.hpp"
#include "wpt/codebook.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/rng.hpp"

namespace wpt
{

class FrameConfig
{
public:
    // Throws ConfigError unless t_s > 0, K >= 1 and K * t_s < t_frame.
    FrameConfig(double t_s, double t_frame, std::size_t k_codewords);

    double t_s() const noexcept { return t_s_; }
    double t_frame() const noexcept { return t_frame_; }
    std::size_t k_codewords() const noexcept { return k_; }
    double t_training() const noexcept { return static_cast<double>(k_) * t_s_; }
    double t_p() const noexcept { return t_frame_ - t_training(); }
    // K T_s / T
    double training_overhead() const noexcept { return t_training() / t_frame_; }

private:
    double t_s_;
    double t_frame_;
    std::size_t k_;
};

struct FeedbackMsg
{
    std::uint64_t frame_id = 0;
    // Zero-based codeword index, most significant bit first.
    std::vector<std::uint8_t> index_bits;
};

// `k_star` is zero-based. Throws DomainError if k_star >= K.
FeedbackMsg encode_feedback(std::size_t k_star, std::size_t k_codewords, std::uint64_t frame_id = 0);
// Throws ProtocolError on a bit-length mismatch or an index >= K.
std::size_t decode_feedback(const FeedbackMsg &msg, std::size_t k_codewords);

struct LinkModel
{
    double delivery_probability = 1.0;
    double latency = 0.0; // seconds, must stay below T_p
    // When non-empty, frame f is delivered iff scripted[f % size] != 0 and
    // the probability is ignored.
    std::vector<std::uint8_t> scripted;

    void validate() const;
};

// What the transmitter falls back to when feedback is lost: the previous
// frame's applied codeword, or uniform power before any frame has run.
struct FallbackState
{
    // nullopt means the uniform-power codeword.
    std::optional<std::size_t> applied;
};

struct TrainingSweep
{
    // What the receiver compares: quantized volts, or raw dc watts when the
    // ADC is disabled.
    std::vector<double> measurements;
    // True dc power of each codeword, used for energy accounting.
    std::vector<double> dc_power;
};

struct FrameReport
{
    std::uint64_t frame_id = 0;
    std::vector<double> measurements;
    std::size_t selected_index = 0;            // zero-based k*
    std::optional<std::size_t> applied_index;  // nullopt: uniform-power fallback
    bool feedback_delivered = false;
    double p_dc_wpt = 0.0; // dc power of the applied codeword, watts
    double p_rf_wpt = 0.0; // RF power of the applied codeword, watts
    double t_p = 0.0;
    double energy_training = 0.0;
    double energy_wpt = 0.0;
    double energy_total = 0.0;
};

// Sweeps every codeword over the (constant) channel. `adc` = nullopt reads
// the dc power directly.
TrainingSweep run_training(const Codebook &codebook, const ChannelRealization &channel,
                           const RectifierModel &model, const std::optional<AdcConfig> &adc, RandomStream &rng);

// One frame. ADC noise and link delivery draw from separate children of
// `rng`. During the feedback latency the transmitter keeps its fallback
// codeword.
FrameReport run_frame(const FrameConfig &config, const Codebook &codebook, const ChannelRealization &channel,
                      const RectifierModel &model, const std::optional<AdcConfig> &adc, const LinkModel &link,
                      FallbackState &fallback, RandomStream &rng, std::uint64_t frame_id = 0);

using ChannelSource = std::function<ChannelRealization(std::uint64_t frame)>;

// Frames 0..n_frames-1 in order; frame f uses rng.split({f}).
std::vector<FrameReport> run_session(const FrameConfig &config, const Codebook &codebook,
                                     const ChannelSource &channel_source, const RectifierModel &model,
                                     const std::optional<AdcConfig> &adc, const LinkModel &link, std::size_t n_frames,
                                     const RandomStream &rng);

} // namespace wpt

#endif
