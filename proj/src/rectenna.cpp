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

#include "wpt/rectenna.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "wpt/errors.hpp"
#include "wpt/textio.hpp"

namespace wpt
{

void DiodeMomentModel::validate() const
{
    if (!(k2 > 0.0) || !std::isfinite(k2))
        throw ConfigError("diode model: k2 must be positive");
    if (!(k4 >= 0.0) || !std::isfinite(k4))
        throw ConfigError("diode model: k4 must be non-negative");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ConfigError("diode model: alpha must be positive");
}

void DiodeMomentModel::gradient_conj(std::span<const cplx> a, std::span<cplx> out) const
{
    if (out.size() != a.size())
        throw DimensionError("gradient_conj: output span has the wrong length");
    const std::size_t n = a.size();
    if (n == 0)
        return;
    const std::vector<cplx> c = self_convolution(a);
    const WaveformMoments mom = waveform_moments(a);
    const double z = k2 * mom.m2 + k4 * mom.m4;
    // dm2/d conj(a_k) = a_k / 2
    // dm4/d conj(a_k) = (3/4) sum_d c_d conj(a_{d-k})
    for (std::size_t k = 0; k < n; ++k)
    {
        cplx acc{};
        for (std::size_t j = 0; j < n; ++j)
            acc += c[j + k] * std::conj(a[j]);
        out[k] = 2.0 * alpha * z * (0.5 * k2 * a[k] + 0.75 * k4 * acc);
    }
}

EfficiencyTableModel::EfficiencyTableModel(std::vector<Row> rows)
{
    std::set<double> ps, rs;
    std::map<std::pair<double, double>, double> cells;
    for (const Row &r : rows)
    {
        if (!std::isfinite(r.p_dbm) || !std::isfinite(r.papr) || !std::isfinite(r.eta))
            throw ConfigError("efficiency table: non-finite value");
        if (r.eta < 0.0 || r.eta > 1.0)
            throw ConfigError("efficiency table: efficiency " + textio::format_sig(r.eta) + " outside [0, 1]");
        if (!cells.emplace(std::make_pair(r.p_dbm, r.papr), r.eta).second)
            throw ConfigError("efficiency table: duplicate grid point (" + textio::format_sig(r.p_dbm) + ", " +
                              textio::format_sig(r.papr) + ")");
        ps.insert(r.p_dbm);
        rs.insert(r.papr);
    }
    if (ps.size() < 2 || rs.size() < 2)
        throw ConfigError("efficiency table: need at least a 2x2 grid");
    if (cells.size() != ps.size() * rs.size())
        throw ConfigError("efficiency table: grid is not rectangular (" + std::to_string(cells.size()) +
                          " points for " + std::to_string(ps.size()) + " powers x " + std::to_string(rs.size()) +
                          " PAPR values)");
    p_axis_.assign(ps.begin(), ps.end());
    papr_axis_.assign(rs.begin(), rs.end());
    eta_.resize(cells.size());
    for (std::size_t j = 0; j < papr_axis_.size(); ++j)
        for (std::size_t i = 0; i < p_axis_.size(); ++i)
            eta_[j * p_axis_.size() + i] = cells.at({p_axis_[i], papr_axis_[j]});
}

EfficiencyTableModel EfficiencyTableModel::load_csv(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError("efficiency table: cannot open " + path.string());
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line))
        throw LoadError("efficiency table: empty file", 1);
    ++lineno;
    if (textio::trim(line) != "p_dbm,papr,eta")
        throw LoadError("efficiency table: header must be 'p_dbm,papr,eta'", lineno);
    std::vector<Row> rows;
    while (std::getline(in, line))
    {
        ++lineno;
        if (textio::trim(line).empty())
            continue;
        const auto f = textio::split(textio::trim(line), ',');
        if (f.size() != 3)
            throw LoadError("efficiency table: expected 3 fields", lineno);
        const auto p = textio::parse_double(f[0]);
        const auto r = textio::parse_double(f[1]);
        const auto e = textio::parse_double(f[2]);
        if (!p || !r || !e)
            throw LoadError("efficiency table: malformed number", lineno);
        rows.push_back({*p, *r, *e});
    }
    try
    {
        return EfficiencyTableModel(std::move(rows));
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(std::string(e.what()) + " in " + path.string());
    }
}

namespace
{
// Locates x on a sorted axis: lower index and fractional position.
std::pair<std::size_t, double> bracket(std::span<const double> axis, double x, bool &clamped) noexcept
{
    if (!(x > axis.front()))
    {
        if (x < axis.front() || std::isnan(x))
            clamped = true;
        return {0, 0.0};
    }
    if (!(x < axis.back()))
    {
        if (x > axis.back())
            clamped = true;
        return {axis.size() - 2, 1.0};
    }
    const auto it = std::upper_bound(axis.begin(), axis.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - axis.begin());
    const std::size_t lo = hi - 1;
    return {lo, (x - axis[lo]) / (axis[hi] - axis[lo])};
}
} // namespace

double EfficiencyTableModel::efficiency(double p_dbm, double papr_value, bool &clamped) const noexcept
{
    const auto [i, u] = bracket(p_axis_, p_dbm, clamped);
    const auto [j, v] = bracket(papr_axis_, papr_value, clamped);
    const std::size_t np = p_axis_.size();
    const double e00 = eta_[j * np + i];
    const double e10 = eta_[j * np + i + 1];
    const double e01 = eta_[(j + 1) * np + i];
    const double e11 = eta_[(j + 1) * np + i + 1];
    // Exact at nodes: weights of zero contribute nothing.
    double eta = 0.0;
    if (u == 0.0 && v == 0.0)
        eta = e00;
    else if (u == 1.0 && v == 0.0)
        eta = e10;
    else if (u == 0.0 && v == 1.0)
        eta = e01;
    else if (u == 1.0 && v == 1.0)
        eta = e11;
    else
        eta = (1.0 - u) * (1.0 - v) * e00 + u * (1.0 - v) * e10 + (1.0 - u) * v * e01 + u * v * e11;
    return eta;
}

EfficiencyTableModel::Evaluation EfficiencyTableModel::evaluate(const EffectiveTones &tones,
                                                                const ToneGrid &grid) const
{
    if (tones.size() != grid.n_tones())
        throw DimensionError("dc_power_table: tone count does not match grid");
    Evaluation out;
    const double p_rf = received_rf_power(tones);
    if (!(p_rf > 0.0))
    {
        out.clamped = true;
        return out;
    }
    const double p_dbm = 10.0 * std::log10(p_rf / 1e-3);
    out.eta = efficiency(p_dbm, papr(tones, grid), out.clamped);
    out.p_dc = p_rf * out.eta;
    return out;
}

double dc_power_moment(const DiodeMomentModel &model, const EffectiveTones &tones, const ToneGrid &grid)
{
    return model.dc_power(waveform_moments(tones, grid));
}

EfficiencyTableModel::Evaluation dc_power_table(const EfficiencyTableModel &model, const EffectiveTones &tones,
                                                const ToneGrid &grid)
{
    return model.evaluate(tones, grid);
}

double dc_power(const RectifierModel &model, const EffectiveTones &tones, const ToneGrid &grid, bool *clamped)
{
    return std::visit(
        [&](const auto &m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, DiodeMomentModel>)
            {
                if (clamped)
                    *clamped = false;
                return dc_power_moment(m, tones, grid);
            }
            else
            {
                const auto ev = m.evaluate(tones, grid);
                if (clamped)
                    *clamped = ev.clamped;
                return ev.p_dc;
            }
        },
        model);
}

void AdcConfig::validate() const
{
    if (resolution_bits < 1 || resolution_bits > 24)
        throw ConfigError("adc: resolution_bits must lie in [1, 24]");
    if (!(v_ref > 0.0) || !std::isfinite(v_ref))
        throw ConfigError("adc: v_ref must be positive");
    if (!(load_resistance > 0.0) || !std::isfinite(load_resistance))
        throw ConfigError("adc: load_resistance must be positive");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        throw ConfigError("adc: noise_sigma must be non-negative");
}

AdcReading measure_dc(const AdcConfig &adc, double p_dc, RandomStream &rng)
{
    if (!(p_dc >= 0.0))
        throw DomainError("measure_dc: dc power must be non-negative");
    double v = std::sqrt(p_dc * adc.load_resistance);
    if (adc.noise_sigma > 0.0)
        v += adc.noise_sigma * rng.gaussian();
    const auto full = adc.full_scale_code();
    const double scaled = v / adc.v_ref * static_cast<double>(full);
    AdcReading r;
    if (scaled <= 0.0)
        r.code = 0;
    else if (scaled >= static_cast<double>(full))
        r.code = full;
    else
        r.code = std::clamp<std::int64_t>(std::llround(scaled), 0, full);
    r.v_quantized = static_cast<double>(r.code) * adc.v_ref / static_cast<double>(full);
    return r;
}

} // namespace wpt
