// SPDX-License-Identifier: Apache-2.0
//
// simris - channel simulator for RIS-assisted mmWave links
// Copyright (C) 2026 simris contributors
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

#include "simris/metrics.hpp"
#include "simris/parallel.hpp"
#include "simris/ris_control.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace simris
{
    namespace
    {
        constexpr std::uint64_t heatmap_stream_tag = 0x4845415400000000ULL; // "HEAT"
    }

    std::string_view to_string(ProfileRule rule)
    {
        switch (rule)
        {
        case ProfileRule::Off:
            return "off";
        case ProfileRule::Random:
            return "random";
        default:
            return "optimal";
        }
    }

    std::optional<ProfileRule> parse_profile_rule(std::string_view text)
    {
        if (text == "off")
            return ProfileRule::Off;
        if (text == "random")
            return ProfileRule::Random;
        if (text == "optimal")
            return ProfileRule::Optimal;
        return std::nullopt;
    }

    double snr(cplx effective, double pt_w, double n0_w)
    {
        if (!(n0_w > 0.0))
            throw std::invalid_argument("Noise power must be positive.");
        return pt_w * std::norm(effective) / n0_w;
    }

    RisPhaseProfile profile_for(const ChannelRealization &r, ProfileRule rule)
    {
        switch (rule)
        {
        case ProfileRule::Off:
            return off_profile(r.h.size());
        case ProfileRule::Random:
        {
            Rng rng = stream_rng(r.seed, r.index, Stream::Phases);
            return random_phases(rng, r.h.size());
        }
        default:
            return optimal_phases(r);
        }
    }

    double channel_gain(const ChannelRealization &r, ProfileRule rule)
    {
        if (rule == ProfileRule::Off)
            return std::norm(r.h_siso);
        return std::norm(effective_channel(r, profile_for(r, rule)));
    }

    RateReport rate_from_gains(std::span<const double> gains, double pt_w, double n0_w)
    {
        if (gains.empty())
            throw std::invalid_argument("Rate evaluation needs at least one realization.");
        if (!(n0_w > 0.0))
            throw std::invalid_argument("Noise power must be positive.");

        CompensatedSum rate_sum, snr_sum;
        std::vector<double> rates(gains.size());
        for (std::size_t i = 0; i < gains.size(); ++i)
        {
            const double rho = pt_w * gains[i] / n0_w;
            rates[i] = std::log2(1.0 + rho);
            rate_sum.add(rates[i]);
            snr_sum.add(rho);
        }
        const double n = static_cast<double>(gains.size());
        const double mean = rate_sum.value() / n;

        CompensatedSum sq;
        for (double r : rates)
            sq.add((r - mean) * (r - mean));

        RateReport rep;
        rep.count = gains.size();
        rep.mean_rate = mean;
        rep.rate_std = gains.size() > 1 ? std::sqrt(sq.value() / (n - 1.0)) : 0.0;
        rep.rate_stderr = rep.rate_std / std::sqrt(n);
        const double mean_snr = snr_sum.value() / n;
        rep.mean_snr_db = mean_snr > 0.0 ? 10.0 * std::log10(mean_snr) : -std::numeric_limits<double>::infinity();
        rep.tx_power_dbm = watts_to_dbm(pt_w);
        rep.noise_dbm = watts_to_dbm(n0_w);
        return rep;
    }

    RateReport achievable_rate(std::span<const ChannelRealization> stream, ProfileRule rule, double pt_w, double n0_w)
    {
        std::vector<double> gains;
        gains.reserve(stream.size());
        for (const auto &r : stream)
            gains.push_back(channel_gain(r, rule));
        return rate_from_gains(gains, pt_w, n0_w);
    }

    std::vector<double> channel_gains(const ChannelConfig &cfg, ProfileRule rule, unsigned threads)
    {
        check_config(cfg);
        std::vector<double> gains(cfg.realizations);
        parallel_for(cfg.realizations, threads,
                     [&](std::size_t i) { gains[i] = channel_gain(realization(cfg, i), rule); });
        return gains;
    }

    RateReport achievable_rate(const ChannelConfig &cfg, ProfileRule rule, double pt_w, double n0_w, unsigned threads)
    {
        const auto gains = channel_gains(cfg, rule, threads);
        return rate_from_gains(gains, pt_w, n0_w);
    }

    std::vector<std::vector<double>> channel_gains(const ChannelConfig &cfg, std::span<const ProfileRule> rules,
                                                   unsigned threads)
    {
        check_config(cfg);
        std::vector<std::vector<double>> gains(rules.size(), std::vector<double>(cfg.realizations));
        parallel_for(cfg.realizations, threads, [&](std::size_t i)
                     {
                         const ChannelRealization r = realization(cfg, i);
                         for (std::size_t k = 0; k < rules.size(); ++k)
                             gains[k][i] = channel_gain(r, rules[k]); });
        return gains;
    }

    std::vector<RateRow> rate_table(const ChannelConfig &cfg, std::span<const ProfileRule> rules,
                                    std::span<const double> tx_power_dbw, double noise_dbm, unsigned threads)
    {
        const double n0 = dbm_to_watts(noise_dbm);
        const auto gains = channel_gains(cfg, rules, threads);

        std::vector<RateRow> rows;
        for (std::size_t k = 0; k < rules.size(); ++k)
            for (double pt_dbw : tx_power_dbw)
                rows.push_back({rules[k], pt_dbw, rate_from_gains(gains[k], db_to_linear(pt_dbw), n0)});
        return rows;
    }

    std::vector<double> default_tx_power_sweep_dbw()
    {
        std::vector<double> out;
        for (int p = -20; p <= 10; p += 5)
            out.push_back(static_cast<double>(p));
        return out;
    }

    std::vector<ScalingRow> power_scaling_sweep(const ChannelConfig &cfg, std::span<const std::size_t> n_list,
                                                double pt_w, double n0_w, unsigned threads)
    {
        std::vector<ScalingRow> rows;
        for (std::size_t n : n_list)
        {
            ChannelConfig c = cfg;
            c.scenario.n_elements = n;
            c.los_mode = LosMode::AlwaysLos;
            c.scattering = false;
            check_config(c);

            ScalingRow row{n, 0.0, 0.0, 0.0};
            row.snr_db_optimal = achievable_rate(c, ProfileRule::Optimal, pt_w, n0_w, threads).mean_snr_db;
            row.snr_db_random = achievable_rate(c, ProfileRule::Random, pt_w, n0_w, threads).mean_snr_db;
            row.snr_db_off = achievable_rate(c, ProfileRule::Off, pt_w, n0_w, threads).mean_snr_db;
            rows.push_back(row);
        }
        return rows;
    }

    std::uint64_t heatmap_cell_seed(std::uint64_t master_seed, std::size_t cell_index)
    {
        return derive_seed(master_seed, heatmap_stream_tag, static_cast<std::uint64_t>(cell_index));
    }

    ChannelConfig heatmap_cell_config(const ChannelConfig &cfg, const RxGrid &grid, std::size_t cell_index)
    {
        const std::size_t nx = grid.x.size();
        if (nx == 0 || cell_index >= grid.size())
            throw std::out_of_range("Heatmap cell index outside the grid.");
        ChannelConfig c = cfg;
        c.scenario.rx.x = grid.x[cell_index % nx];
        c.scenario.rx.y = grid.y[cell_index / nx];
        c.seed = heatmap_cell_seed(cfg.seed, cell_index);
        return c;
    }

    Heatmap rate_heatmap(const ChannelConfig &cfg, const RxGrid &grid, ProfileRule rule, double pt_w, double n0_w,
                         unsigned threads, const ProgressFn &progress)
    {
        if (grid.size() == 0)
            throw std::invalid_argument("Heatmap grid is empty.");

        Heatmap out;
        out.grid = grid;
        out.cells.resize(grid.size());

        // Validate every cell before spending time on any of them.
        std::vector<ChannelConfig> configs;
        configs.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            configs.push_back(heatmap_cell_config(cfg, grid, i));
            check_config(configs.back());
        }

        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            HeatmapCell &cell = out.cells[i];
            cell.x = configs[i].scenario.rx.x;
            cell.y = configs[i].scenario.rx.y;
            cell.seed = configs[i].seed;
            cell.report = achievable_rate(configs[i], rule, pt_w, n0_w, threads);
            if (progress)
                progress(i + 1, grid.size());
        }
        return out;
    }
}
