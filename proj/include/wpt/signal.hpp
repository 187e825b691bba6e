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

#ifndef WPT_SIGNAL_HPP_
#define WPT_SIGNAL_HPP_

// Multi-sine signal model: tone grid, transmit weights, received tones and
// their closed-form time averages.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wpt
{

using cplx = std::complex<double>;

// Dense row-major complex matrix; rows are antennas, columns tones (or taps).
class ComplexMatrix
{
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill = {})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    cplx &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }

    // Sum of squared magnitudes of all entries.
    double squared_norm() const noexcept;

    bool operator==(const ComplexMatrix &) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// N tones uniformly spaced by B/N and centered on the carrier.
//   omega_n = 2*pi*(fc + (n - (N-1)/2) * B/N),  n = 0..N-1
class ToneGrid
{
public:
    ToneGrid(std::size_t n_tones, double center_frequency_hz, double bandwidth_hz);

    std::size_t n_tones() const noexcept { return omega_.size(); }
    double center_frequency() const noexcept { return fc_; }
    double bandwidth() const noexcept { return bandwidth_; }
    double spacing_hz() const noexcept { return bandwidth_ / static_cast<double>(omega_.size()); }
    std::span<const double> angular_frequencies() const noexcept { return omega_; }

    double highest_frequency_hz() const noexcept;
    // Common period of y^2 and y^4 for any received multi-sine on this grid.
    double fundamental_period() const noexcept { return 1.0 / spacing_hz(); }

    bool operator==(const ToneGrid &) const = default;

private:
    double fc_;
    double bandwidth_;
    std::vector<double> omega_;
};

// Complex amplitude weights s_{m,n} with the transmit budget P.
// Construction enforces (1/2) * sum |s|^2 <= P (1e-9 relative slack).
class WaveformWeights
{
public:
    WaveformWeights(ComplexMatrix weights, double power_budget);

    std::size_t m_antennas() const noexcept { return w_.rows(); }
    std::size_t n_tones() const noexcept { return w_.cols(); }
    double power_budget() const noexcept { return budget_; }

    const ComplexMatrix &matrix() const noexcept { return w_; }
    cplx operator()(std::size_t m, std::size_t n) const noexcept { return w_(m, n); }

    // (1/2) * ||s||^2
    double transmit_power() const noexcept { return 0.5 * w_.squared_norm(); }

    // Rescales an arbitrary nonzero matrix onto the sphere (1/2)||s||^2 = P.
    static WaveformWeights on_power_sphere(ComplexMatrix weights, double power_budget);

    bool operator==(const WaveformWeights &) const = default;

private:
    ComplexMatrix w_;
    double budget_;
};

// Per-tone amplitudes a_n = sum_m h_{m,n} s_{m,n} seen by the receiver.
struct EffectiveTones
{
    std::vector<cplx> amplitudes;

    std::size_t size() const noexcept { return amplitudes.size(); }
};

struct WaveformMoments
{
    double m2 = 0.0; // time average of y^2, watts
    double m4 = 0.0; // time average of y^4, watts^2
};

class ChannelRealization;

// x_m(t) = Re{ sum_n s_{m,n} exp(j omega_n t) } for antenna m (0-based).
std::vector<double> synthesize_transmit_waveform(const WaveformWeights &weights, const ToneGrid &grid,
                                                 std::size_t antenna, std::span<const double> time_points);

// y(t) = Re{ sum_n a_n exp(j omega_n t) }.
std::vector<double> synthesize_received_waveform(const EffectiveTones &tones, const ToneGrid &grid,
                                                 std::span<const double> time_points);

EffectiveTones effective_tones(const ChannelRealization &channel, const WaveformWeights &weights);

// P_RF = (1/2) sum_n |a_n|^2
double received_rf_power(const EffectiveTones &tones) noexcept;

// m2 = (1/2) sum |a_n|^2 and
// m4 = (3/8) sum_{n1+n2=n3+n4} a_n1 a_n2 conj(a_n3) conj(a_n4).
// The quadruple sum equals sum_d |c_d|^2 with c the self-convolution of a,
// which is how it is evaluated here (O(N^2), real by construction).
WaveformMoments waveform_moments(const EffectiveTones &tones, const ToneGrid &grid);
WaveformMoments waveform_moments(std::span<const cplx> amplitudes) noexcept;

// Self-convolution c_d = sum_{n1+n2=d} a_n1 a_n2, d = 0..2N-2.
std::vector<cplx> self_convolution(std::span<const cplx> amplitudes);

// Peak of y(t)^2 over one fundamental period divided by its mean, sampled
// at `oversampling` times the highest tone frequency.
double papr(const EffectiveTones &tones, const ToneGrid &grid, int oversampling = 32);

} // namespace wpt

#endif
