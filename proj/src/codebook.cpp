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

#include "wpt/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "wpt/errors.hpp"
#include "wpt/strategies.hpp"
#include "wpt/textio.hpp"

namespace wpt
{

Codebook::Codebook(std::vector<WaveformWeights> entries, bool nested, std::string provenance)
    : entries_(std::move(entries)), nested_(nested), provenance_(std::move(provenance))
{
    if (entries_.empty())
        throw DomainError("Codebook: at least one codeword is required");
    const auto &first = entries_.front();
    for (std::size_t k = 0; k < entries_.size(); ++k)
    {
        const auto &w = entries_[k];
        if (w.m_antennas() != first.m_antennas() || w.n_tones() != first.n_tones())
            throw DimensionError("Codebook: codeword " + std::to_string(k + 1) + " has different dimensions");
        if (w.power_budget() != first.power_budget())
            throw DomainError("Codebook: codeword " + std::to_string(k + 1) + " has a different power budget");
        if (std::abs(w.transmit_power() - w.power_budget()) > 1e-9 * w.power_budget())
            throw DomainError("Codebook: codeword " + std::to_string(k + 1) + " is not on the power sphere");
    }
    for (char &c : provenance_)
        if (c == '\n' || c == '\r')
            c = ' ';
}

Codebook Codebook::prefix(std::size_t k) const
{
    if (k < 1 || k > entries_.size())
        throw DomainError("Codebook::prefix: size " + std::to_string(k) + " out of range");
    return Codebook(std::vector<WaveformWeights>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(k)),
                    nested_, provenance_);
}

namespace
{
WaveformWeights random_codeword(std::size_t m, std::size_t n, double power, RandomStream &rng)
{
    ComplexMatrix s(m, n);
    for (cplx &v : s.data())
        v = rng.complex_gaussian(1.0);
    return WaveformWeights::on_power_sphere(std::move(s), power);
}

bool is_power_of_two(std::size_t k) noexcept
{
    return k >= 1 && (k & (k - 1)) == 0;
}
} // namespace

Codebook gen_random(std::size_t m_antennas, const ToneGrid &grid, double power, std::size_t k, RandomStream &rng)
{
    if (k < 1)
        throw DomainError("gen_random: k must be at least 1");
    std::vector<WaveformWeights> entries;
    entries.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        entries.push_back(random_codeword(m_antennas, grid.n_tones(), power, rng));
    return Codebook(std::move(entries), false, "gen_random k=" + std::to_string(k) + " key=" + std::to_string(rng.key()));
}

Codebook gen_nested(std::size_t m_antennas, const ToneGrid &grid, double power, std::size_t k_max,
                    RandomStream &rng)
{
    if (!is_power_of_two(k_max))
        throw DomainError("gen_nested: k_max must be a power of two, got " + std::to_string(k_max));
    std::vector<WaveformWeights> entries;
    entries.reserve(k_max);
    entries.push_back(up_weights(m_antennas, grid, power));
    for (std::size_t i = 1; i < k_max; ++i)
        entries.push_back(random_codeword(m_antennas, grid.n_tones(), power, rng));
    return Codebook(std::move(entries), true,
                    "gen_nested k_max=" + std::to_string(k_max) + " key=" + std::to_string(rng.key()));
}

double mean_best_dc_power(std::span<const ChannelRealization> channels, const Codebook &codebook,
                          const DiodeMomentModel &model, Execution exec)
{
    if (channels.empty())
        return 0.0;
    const auto table = kernels::dc_table(channels, codebook.entries(), model, exec);
    double acc = 0.0;
    for (std::size_t c = 0; c < table.n_channels; ++c)
    {
        const auto row = table.row(c);
        acc += *std::max_element(row.begin(), row.end());
    }
    return acc / static_cast<double>(table.n_channels);
}

namespace
{

// Mean dc power of one codeword over a cluster of channels.
double cluster_objective(std::span<const ChannelRealization> training, std::span<const std::size_t> members,
                         const ComplexMatrix &s, const DiodeMomentModel &model, std::vector<cplx> &amps)
{
    double acc = 0.0;
    for (std::size_t c : members)
    {
        kernels::effective_amplitudes(training[c].gains(), s, amps);
        acc += model.dc_power(amps);
    }
    return acc / static_cast<double>(members.size());
}

// Wirtinger gradient of the cluster objective with respect to conj(s).
ComplexMatrix cluster_gradient(std::span<const ChannelRealization> training, std::span<const std::size_t> members,
                               const ComplexMatrix &s, const DiodeMomentModel &model, std::vector<cplx> &amps,
                               std::vector<cplx> &grad_a)
{
    ComplexMatrix g(s.rows(), s.cols());
    for (std::size_t c : members)
    {
        const ComplexMatrix &h = training[c].gains();
        kernels::effective_amplitudes(h, s, amps);
        model.gradient_conj(amps, grad_a);
        for (std::size_t m = 0; m < s.rows(); ++m)
            for (std::size_t n = 0; n < s.cols(); ++n)
                g(m, n) += std::conj(h(m, n)) * grad_a[n];
    }
    const double inv = 1.0 / static_cast<double>(members.size());
    for (cplx &v : g.data())
        v *= inv;
    return g;
}

// Projected gradient ascent from `start`; never returns a worse codeword.
WaveformWeights ascend(std::span<const ChannelRealization> training, std::span<const std::size_t> members,
                       const WaveformWeights &start, const DiodeMomentModel &model, const LloydOptions &opt)
{
    const std::size_t n_tones = start.n_tones();
    std::vector<cplx> amps(n_tones), grad_a(n_tones);
    ComplexMatrix s = start.matrix();
    const double radius = std::sqrt(s.squared_norm());
    double f = cluster_objective(training, members, s, model, amps);
    double step = 0.5;

    for (std::size_t it = 0; it < opt.ascent_steps; ++it)
    {
        const ComplexMatrix g = cluster_gradient(training, members, s, model, amps, grad_a);
        const double gnorm = std::sqrt(g.squared_norm());
        if (!(gnorm > 0.0) || !std::isfinite(gnorm))
            break;
        bool accepted = false;
        for (int b = 0; b < opt.max_backtracks; ++b, step *= 0.5)
        {
            ComplexMatrix cand = s;
            const double scale = step * radius / gnorm;
            for (std::size_t i = 0; i < cand.size(); ++i)
                cand.data()[i] += scale * g.data()[i];
            const double cn = cand.squared_norm();
            if (!(cn > 0.0))
                continue;
            const double proj = std::sqrt(2.0 * opt.power / cn);
            for (cplx &v : cand.data())
                v *= proj;
            const double fc = cluster_objective(training, members, cand, model, amps);
            if (fc > f)
            {
                s = std::move(cand);
                f = fc;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            break;
        step = std::min(1.0, 2.0 * step);
    }
    // Already on the sphere; rescaling again could perturb the objective.
    return WaveformWeights(std::move(s), opt.power);
}

struct Assignment
{
    std::vector<std::size_t> index;
    std::vector<double> best;
    double objective = 0.0;
};

Assignment assign(std::span<const ChannelRealization> training, std::span<const WaveformWeights> codewords,
                  const DiodeMomentModel &model, Execution exec)
{
    const auto table = kernels::dc_table(training, codewords, model, exec);
    Assignment a;
    a.index = kernels::best_codeword(table, exec);
    a.best.resize(training.size());
    double acc = 0.0;
    for (std::size_t c = 0; c < training.size(); ++c)
    {
        a.best[c] = table(c, a.index[c]);
        acc += a.best[c];
    }
    a.objective = acc / static_cast<double>(training.size());
    return a;
}

} // namespace

Codebook train_lloyd(std::span<const ChannelRealization> training, std::size_t k, const DiodeMomentModel &model,
                     const LloydOptions &options, RandomStream &rng, const std::optional<Codebook> &initial,
                     LloydTrace *trace)
{
    if (k < 1)
        throw DomainError("train_lloyd: k must be at least 1");
    if (training.size() < k)
        throw DomainError("train_lloyd: training set has " + std::to_string(training.size()) +
                          " channels, fewer than k = " + std::to_string(k));
    if (options.iters < 1)
        throw DomainError("train_lloyd: iters must be at least 1");
    if (options.frozen_prefix > k)
        throw DomainError("train_lloyd: frozen prefix exceeds k");
    model.validate();

    const SmfParams smf{3.0, options.power};
    std::vector<WaveformWeights> cw;
    if (initial)
    {
        if (initial->size() != k)
            throw DimensionError("train_lloyd: initial codebook has " + std::to_string(initial->size()) +
                                 " entries, expected " + std::to_string(k));
        cw.assign(initial->entries().begin(), initial->entries().end());
    }
    else
    {
        // Partial Fisher-Yates: k distinct training channels.
        std::vector<std::size_t> perm(training.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i)
        {
            const auto span = static_cast<double>(perm.size() - i);
            const std::size_t j = i + std::min(perm.size() - i - 1, static_cast<std::size_t>(rng.uniform() * span));
            std::swap(perm[i], perm[j]);
            cw.push_back(smf_weights(training[perm[i]], smf));
        }
    }
    for (const auto &w : cw)
        if (w.m_antennas() != training.front().m_antennas() || w.n_tones() != training.front().n_tones())
            throw DimensionError("train_lloyd: codeword and training channel dimensions differ");

    LloydTrace local;
    LloydTrace &tr = trace ? *trace : local;
    tr = LloydTrace{};

    Assignment cur = assign(training, cw, model, options.exec);
    tr.objective.push_back(cur.objective);

    for (std::size_t it = 0; it < options.iters; ++it)
    {
        std::vector<std::vector<std::size_t>> clusters(k);
        for (std::size_t c = 0; c < training.size(); ++c)
            clusters[cur.index[c]].push_back(c);

        // UPDATE: clusters are independent; each result depends only on its
        // own members, so the schedule cannot change the outcome.
        std::vector<std::optional<WaveformWeights>> updated(k);
        const auto k_signed = static_cast<std::ptrdiff_t>(k);
        const auto first = static_cast<std::ptrdiff_t>(options.frozen_prefix);
        if (options.exec == Execution::parallel)
        {
#pragma omp parallel for schedule(dynamic, 1)
            for (std::ptrdiff_t j = first; j < k_signed; ++j)
            {
                const auto ju = static_cast<std::size_t>(j);
                if (!clusters[ju].empty())
                    updated[ju] = ascend(training, clusters[ju], cw[ju], model, options);
            }
        }
        else
        {
            for (std::ptrdiff_t j = first; j < k_signed; ++j)
            {
                const auto ju = static_cast<std::size_t>(j);
                if (!clusters[ju].empty())
                    updated[ju] = ascend(training, clusters[ju], cw[ju], model, options);
            }
        }
        for (std::size_t j = options.frozen_prefix; j < k; ++j)
            if (updated[j])
                cw[j] = std::move(*updated[j]);

        // Re-seed empty clusters, lowest index first, each from the channel
        // that is currently worst served.
        std::vector<double> served = cur.best;
        for (std::size_t j = options.frozen_prefix; j < k; ++j)
        {
            if (!clusters[j].empty())
                continue;
            const auto worst = static_cast<std::size_t>(std::min_element(served.begin(), served.end()) - served.begin());
            cw[j] = smf_weights(training[worst], smf);
            std::vector<cplx> amps(training[worst].n_tones());
            kernels::effective_amplitudes(training[worst].gains(), cw[j].matrix(), amps);
            served[worst] = std::max(served[worst], model.dc_power(amps));
        }

        Assignment next = assign(training, cw, model, options.exec);
        tr.objective.push_back(next.objective);
        tr.iterations_run = it + 1;
        const bool unchanged = next.index == cur.index;
        cur = std::move(next);
        if (unchanged)
        {
            tr.converged = true;
            break;
        }
    }

    return Codebook(std::move(cw), false,
                    "train_lloyd k=" + std::to_string(k) + " train=" + std::to_string(training.size()) +
                        " iters=" + std::to_string(tr.iterations_run) + " key=" + std::to_string(rng.key()));
}

Codebook train_nested_lloyd(std::span<const ChannelRealization> training, std::size_t k_max,
                            const DiodeMomentModel &model, const LloydOptions &options, RandomStream &rng)
{
    if (!is_power_of_two(k_max))
        throw DomainError("train_nested_lloyd: k_max must be a power of two, got " + std::to_string(k_max));
    if (training.size() < k_max)
        throw DomainError("train_nested_lloyd: training set has " + std::to_string(training.size()) +
                          " channels, fewer than k_max = " + std::to_string(k_max));
    const ChannelRealization &ref = training.front();
    const SmfParams smf{3.0, options.power};

    std::vector<WaveformWeights> family{up_weights(ref.m_antennas(), ref.grid(), options.power)};
    for (std::size_t k = 2; k <= k_max; k *= 2)
    {
        // New codewords start from the SMF weights of the channels the
        // current family serves worst.
        const auto table = kernels::dc_table(training, family, model, options.exec);
        std::vector<std::pair<double, std::size_t>> served(training.size());
        for (std::size_t c = 0; c < training.size(); ++c)
        {
            const auto row = table.row(c);
            served[c] = {*std::max_element(row.begin(), row.end()), c};
        }
        std::sort(served.begin(), served.end());
        std::vector<WaveformWeights> init = family;
        // Spread the seeds over the worst-served half instead of taking
        // consecutive channels.
        const std::size_t need = k - family.size();
        const std::size_t pool = std::max(need, training.size() / 2);
        std::vector<std::size_t> pick(pool);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        for (std::size_t i = 0; i < need; ++i)
        {
            const auto span = static_cast<double>(pool - i);
            const std::size_t j = i + std::min(pool - i - 1, static_cast<std::size_t>(rng.uniform() * span));
            std::swap(pick[i], pick[j]);
            init.push_back(smf_weights(training[served[pick[i]].second], smf));
        }
        LloydOptions opt = options;
        opt.frozen_prefix = family.size();
        const Codebook trained = train_lloyd(training, k, model, opt, rng, Codebook(std::move(init), false));
        family.assign(trained.entries().begin(), trained.entries().end());
    }
    return Codebook(std::move(family), true,
                    "train_nested_lloyd k_max=" + std::to_string(k_max) + " train=" + std::to_string(training.size()) +
                        " iters=" + std::to_string(options.iters) + " key=" + std::to_string(rng.key()));
}

void save_codebook(const Codebook &codebook, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("save_codebook: cannot open " + path.string());
    out << "wptcb v1 " << codebook.m_antennas() << ' ' << codebook.n_tones() << ' ' << codebook.size() << ' '
        << textio::format_exact(codebook.power()) << ' ' << (codebook.nested() ? 1 : 0) << '\n';
    out << "provenance " << codebook.provenance() << '\n';
    for (const auto &w : codebook.entries())
        for (std::size_t m = 0; m < w.m_antennas(); ++m)
            for (std::size_t n = 0; n < w.n_tones(); ++n)
                out << (m + 1) << ' ' << (n + 1) << ' ' << textio::format_exact(w(m, n).real()) << ' '
                    << textio::format_exact(w(m, n).imag()) << '\n';
    if (!out)
        throw IoError("save_codebook: write failed for " + path.string());
}

Codebook load_codebook(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError("load_codebook: cannot open " + path.string());

    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line))
        throw LoadError("load_codebook: empty file", lineno);
    const auto h = textio::split_ws(line);
    if (h.size() < 2 || h[0] != "wptcb")
        throw LoadError("load_codebook: missing 'wptcb' header", lineno);
    if (h[1] != "v1")
        throw LoadError("load_codebook: unsupported version '" + std::string(h[1]) + "'", lineno);
    if (h.size() != 7)
        throw LoadError("load_codebook: header must be 'wptcb v1 M N K P nested'", lineno);
    const auto m = textio::parse_int(h[2]);
    const auto n = textio::parse_int(h[3]);
    const auto k = textio::parse_int(h[4]);
    const auto p = textio::parse_double(h[5]);
    const auto nested = textio::parse_int(h[6]);
    if (!m || !n || !k || !p || !nested || *m < 1 || *n < 1 || *k < 1 || !(*p > 0.0) || (*nested != 0 && *nested != 1))
        throw LoadError("load_codebook: malformed header values", lineno);

    ++lineno;
    if (!std::getline(in, line) || line.rfind("provenance", 0) != 0)
        throw LoadError("load_codebook: missing provenance line", lineno);
    std::string provenance = line.size() > 11 ? line.substr(11) : std::string{};

    const auto mu = static_cast<std::size_t>(*m);
    const auto nu = static_cast<std::size_t>(*n);
    const auto ku = static_cast<std::size_t>(*k);
    std::vector<WaveformWeights> entries;
    entries.reserve(ku);
    for (std::size_t kk = 0; kk < ku; ++kk)
    {
        ComplexMatrix s(mu, nu);
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = 0; j < nu; ++j)
            {
                ++lineno;
                if (!std::getline(in, line))
                    throw LoadError("load_codebook: truncated file, codeword " + std::to_string(kk + 1) +
                                        " incomplete",
                                    lineno);
                const auto f = textio::split_ws(line);
                if (f.size() != 4)
                    throw LoadError("load_codebook: expected 'm n real imag'", lineno);
                const auto fm = textio::parse_int(f[0]);
                const auto fn = textio::parse_int(f[1]);
                const auto re = textio::parse_double(f[2]);
                const auto im = textio::parse_double(f[3]);
                if (!fm || !fn || !re || !im)
                    throw LoadError("load_codebook: malformed entry", lineno);
                if (*fm != static_cast<long long>(i + 1) || *fn != static_cast<long long>(j + 1))
                    throw LoadError("load_codebook: expected indices " + std::to_string(i + 1) + " " +
                                        std::to_string(j + 1),
                                    lineno);
                s(i, j) = {*re, *im};
            }
        try
        {
            entries.emplace_back(std::move(s), *p);
        }
        catch (const Error &e)
        {
            throw LoadError(std::string("load_codebook: codeword ") + std::to_string(kk + 1) + ": " + e.what(), lineno);
        }
    }
    while (std::getline(in, line))
    {
        ++lineno;
        if (!textio::trim(line).empty())
            throw LoadError("load_codebook: trailing data after last codeword", lineno);
    }
    try
    {
        return Codebook(std::move(entries), *nested == 1, std::move(provenance));
    }
    catch (const Error &e)
    {
        throw LoadError(std::string("load_codebook: ") + e.what());
    }
}

} // namespace wpt
