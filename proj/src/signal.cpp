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

#include "wpt/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wpt/channel.hpp"
#include "wpt/errors.hpp"

namespace wpt
{

double ComplexMatrix::squared_norm() const noexcept
{
    double acc = 0.0;
    for (const cplx &v : data_)
        acc += std::norm(v);
    return acc;
}

ToneGrid::ToneGrid(std::size_t n_tones, double center_frequency_hz, double bandwidth_hz)
    : fc_(center_frequency_hz), bandwidth_(bandwidth_hz)
{
    if (n_tones < 1)
        throw DomainError("ToneGrid: at least one tone is required");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw DomainError("ToneGrid: bandwidth must be positive");
    if (!(center_frequency_hz > 0.0) || !std::isfinite(center_frequency_hz))
        throw DomainError("ToneGrid: center frequency must be positive");

    const double df = bandwidth_hz / static_cast<double>(n_tones);
    const double mid = 0.5 * static_cast<double>(n_tones - 1);
    omega_.resize(n_tones);
    for (std::size_t n = 0; n < n_tones; ++n)
        omega_[n] = 2.0 * std::numbers::pi * (fc_ + (static_cast<double>(n) - mid) * df);
}

double ToneGrid::highest_frequency_hz() const noexcept
{
    return omega_.back() / (2.0 * std::numbers::pi);
}

WaveformWeights::WaveformWeights(ComplexMatrix weights, double power_budget)
    : w_(std::move(weights)), budget_(power_budget)
{
    if (w_.rows() < 1 || w_.cols() < 1)
        throw DimensionError("WaveformWeights: empty weight matrix");
    if (!(power_budget > 0.0) || !std::isfinite(power_budget))
        throw DomainError("WaveformWeights: power budget must be positive");
    for (const cplx &v : w_.data())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("WaveformWeights: non-finite weight");
    if (transmit_power() > budget_ * (1.0 + 1e-9))
        throw DomainError("WaveformWeights: transmit power " + std::to_string(transmit_power()) +
                          " W exceeds budget " + std::to_string(budget_) + " W");
}

WaveformWeights WaveformWeights::on_power_sphere(ComplexMatrix weights, double power_budget)
{
    const double sq = weights.squared_norm();
    if (!(sq > 0.0))
        throw DomainError("WaveformWeights: cannot rescale an all-zero weight matrix");
    const double scale = std::sqrt(2.0 * power_budget / sq);
    for (cplx &v : weights.data())
        v *= scale;
    return WaveformWeights(std::move(weights), power_budget);
}

namespace
{
std::vector<double> synthesize(std::span<const cplx> amplitudes, std::span<const double> omega,
                               std::span<const double> time_points)
{
    std::vector<double> out(time_points.size(), 0.0);
    for (std::size_t i = 0; i < time_points.size(); ++i)
    {
        const double t = time_points[i];
        if (!std::isfinite(t))
            throw DomainError("synthesize: non-finite time point");
        double acc = 0.0;
        for (std::size_t n = 0; n < amplitudes.size(); ++n)
        {
            const double ph = omega[n] * t;
            // Re{a e^{j ph}} = Re(a) cos(ph) - Im(a) sin(ph)
            acc += amplitudes[n].real() * std::cos(ph) - amplitudes[n].imag() * std::sin(ph);
        }
        out[i] = acc;
    }
    return out;
}
} // namespace

std::vector<double> synthesize_transmit_waveform(const WaveformWeights &weights, const ToneGrid &grid,
                                                 std::size_t antenna, std::span<const double> time_points)
{
    if (weights.n_tones() != grid.n_tones())
        throw DimensionError("synthesize_transmit_waveform: weights have " + std::to_string(weights.n_tones()) +
                             " tones, grid has " + std::to_string(grid.n_tones()));
    if (antenna >= weights.m_antennas())
        throw DomainError("synthesize_transmit_waveform: antenna index " + std::to_string(antenna) +
                          " out of range [0, " + std::to_string(weights.m_antennas()) + ")");
    const auto row = weights.matrix().data().subspan(antenna * weights.n_tones(), weights.n_tones());
    return synthesize(row, grid.angular_frequencies(), time_points);
}

std::vector<double> synthesize_received_waveform(const EffectiveTones &tones, const ToneGrid &grid,
                                                 std::span<const double> time_points)
{
    if (tones.size() != grid.n_tones())
        throw DimensionError("synthesize_received_waveform: tone count does not match grid");
    return synthesize(tones.amplitudes, grid.angular_frequencies(), time_points);
}

EffectiveTones effective_tones(const ChannelRealization &channel, const WaveformWeights &weights)
{
    const ComplexMatrix &h = channel.gains();
    const ComplexMatrix &s = weights.matrix();
    if (h.rows() != s.rows() || h.cols() != s.cols())
        throw DimensionError("effective_tones: channel is " + std::to_string(h.rows()) + "x" +
                             std::to_string(h.cols()) + ", weights are " + std::to_string(s.rows()) + "x" +
                             std::to_string(s.cols()));
    EffectiveTones out;
    out.amplitudes.assign(h.cols(), cplx{});
    for (std::size_t m = 0; m < h.rows(); ++m)
        for (std::size_t n = 0; n < h.cols(); ++n)
            out.amplitudes[n] += h(m, n) * s(m, n);
    return out;
}

double received_rf_power(const EffectiveTones &tones) noexcept
{
    double acc = 0.0;
    for (const cplx &a : tones.amplitudes)
        acc += std::norm(a);
    return 0.5 * acc;
}

std::vector<cplx> self_convolution(std::span<const cplx> a)
{
    if (a.empty())
        return {};
    std::vector<cplx> c(2 * a.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            c[i + j] += a[i] * a[j];
    return c;
}

WaveformMoments waveform_moments(std::span<const cplx> amplitudes) noexcept
{
    WaveformMoments out;
    const std::size_t n = amplitudes.size();
    if (n == 0)
        return out;
    double sq = 0.0;
    for (const cplx &a : amplitudes)
        sq += std::norm(a);
    out.m2 = 0.5 * sq;

    double quad = 0.0;
    for (std::size_t d = 0; d + 1 < 2 * n; ++d)
    {
        const std::size_t lo = d >= n ? d - n + 1 : 0;
        const std::size_t hi = std::min(d, n - 1);
        cplx c{};
        for (std::size_t i = lo; i <= hi; ++i)
            c += amplitudes[i] * amplitudes[d - i];
        quad += std::norm(c);
    }
    out.m4 = 0.375 * quad;
    return out;
}

WaveformMoments waveform_moments(const EffectiveTones &tones, const ToneGrid &grid)
{
    if (tones.size() != grid.n_tones())
        throw DimensionError("waveform_moments: tone count does not match grid");
    return waveform_moments(tones.amplitudes);
}

double papr(const EffectiveTones &tones, const ToneGrid &grid, int oversampling)
{
    if (oversampling < 8)
        throw DomainError("papr: oversampling must be at least 8");
    if (tones.size() != grid.n_tones())
        throw DimensionError("papr: tone count does not match grid");
    const double mean = received_rf_power(tones);
    if (!(mean > 0.0))
        throw DomainError("papr: undefined for the zero waveform");

    const double period = grid.fundamental_period();
    const auto samples = static_cast<std::size_t>(
        std::ceil(static_cast<double>(oversampling) * grid.highest_frequency_hz() * period));
    const auto omega = grid.angular_frequencies();
    double peak = 0.0;
    for (std::size_t i = 0; i < samples; ++i)
    {
        const double t = period * static_cast<double>(i) / static_cast<double>(samples);
        double y = 0.0;
        for (std::size_t n = 0; n < tones.size(); ++n)
        {
            const double ph = omega[n] * t;
            y += tones.amplitudes[n].real() * std::cos(ph) - tones.amplitudes[n].imag() * std::sin(ph);
        }
        peak = std::max(peak, y * y);
    }
    return peak / mean;
}

} // namespace wpt
