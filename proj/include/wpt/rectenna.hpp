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

#ifndef WPT_RECTENNA_HPP_
#define WPT_RECTENNA_HPP_

// Rectifier models mapping the received multi-sine to output dc power, and
// the receiver's ADC measurement path.

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "wpt/rng.hpp"
#include "wpt/signal.hpp"

namespace wpt
{

// Truncated diode expansion: z = k2*m2 + k4*m4, P_DC = alpha * z^2.
// Defaults are placeholders, not measured values.
struct DiodeMomentModel
{
    double k2 = 0.17;
    double k4 = 19.1;
    double alpha = 1.0;

    void validate() const;

    double dc_power(const WaveformMoments &moments) const noexcept
    {
        const double z = k2 * moments.m2 + k4 * moments.m4;
        return alpha * z * z;
    }
    double dc_power(std::span<const cplx> amplitudes) const noexcept
    {
        return dc_power(waveform_moments(amplitudes));
    }

    // Wirtinger derivative dP_DC/d conj(a_n) for every tone, written into
    // `out` (same length as `amplitudes`). The steepest-ascent direction in
    // the amplitudes is 2 * out.
    void gradient_conj(std::span<const cplx> amplitudes, std::span<cplx> out) const;
};

// Efficiency surface eta(p_dbm, papr) on a rectangular grid with bilinear
// interpolation; queries outside the grid clamp to the boundary.
class EfficiencyTableModel
{
public:
    struct Row
    {
        double p_dbm;
        double papr;
        double eta;
    };

    struct Evaluation
    {
        double p_dc = 0.0;
        double eta = 0.0;
        bool clamped = false;
    };

    // Rows in any order; throws ConfigError if the grid is not rectangular,
    // smaller than 2x2, has duplicates or an efficiency outside [0, 1].
    explicit EfficiencyTableModel(std::vector<Row> rows);

    // CSV with header "p_dbm,papr,eta"; throws LoadError / ConfigError.
    static EfficiencyTableModel load_csv(const std::filesystem::path &path);

    std::span<const double> power_axis() const noexcept { return p_axis_; }
    std::span<const double> papr_axis() const noexcept { return papr_axis_; }

    // Interpolated efficiency at (p_dbm, papr); sets `clamped` when either
    // coordinate had to be moved onto the grid boundary.
    double efficiency(double p_dbm, double papr_value, bool &clamped) const noexcept;

    Evaluation evaluate(const EffectiveTones &tones, const ToneGrid &grid) const;

private:
    std::vector<double> p_axis_;
    std::vector<double> papr_axis_;
    std::vector<double> eta_; // papr-major: eta_[i_papr * p_axis_.size() + i_p]
};

using RectifierModel = std::variant<DiodeMomentModel, EfficiencyTableModel>;

// P_DC for either model. For the table model, `clamped` (if given) receives
// the diagnostics flag; the moment model never clamps.
double dc_power(const RectifierModel &model, const EffectiveTones &tones, const ToneGrid &grid,
                bool *clamped = nullptr);

double dc_power_moment(const DiodeMomentModel &model, const EffectiveTones &tones, const ToneGrid &grid);
EfficiencyTableModel::Evaluation dc_power_table(const EfficiencyTableModel &model, const EffectiveTones &tones,
                                                const ToneGrid &grid);

struct AdcConfig
{
    int resolution_bits = 12;
    double v_ref = 3.3;
    double noise_sigma = 0.0;
    double load_resistance = 5000.0;

    void validate() const;
    std::int64_t full_scale_code() const noexcept { return (std::int64_t{1} << resolution_bits) - 1; }
};

struct AdcReading
{
    std::int64_t code = 0;
    double v_quantized = 0.0;
};

// v = sqrt(p_dc * R_L), plus N(0, noise_sigma) noise, then
// code = clamp(round(v / v_ref * (2^bits - 1)), 0, 2^bits - 1) with
// halfway cases rounded away from zero. The stream is consumed only when
// noise_sigma > 0.
AdcReading measure_dc(const AdcConfig &adc, double p_dc, RandomStream &rng);

} // namespace wpt

#endif
