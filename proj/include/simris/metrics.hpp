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

#ifndef SIMRIS_METRICS_HPP
#define SIMRIS_METRICS_HPP

#include "simris/channel.hpp"
#include "simris/phase_profile.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace simris
{
    enum class ProfileRule
    {
        Off,
        Random,
        Optimal
    };

    std::string_view to_string(ProfileRule rule);
    std::optional<ProfileRule> parse_profile_rule(std::string_view text);

    inline constexpr double default_noise_dbm = -100.0;

    struct RateReport
    {
        double mean_rate = 0.0;   // bits/s/Hz
        double rate_std = 0.0;
        double rate_stderr = 0.0;
        double mean_snr_db = 0.0; // 10 log10 of the mean linear SNR
        std::size_t count = 0;
        double tx_power_dbm = 0.0;
        double noise_dbm = default_noise_dbm;
    };

    // rho = Pt |effective|^2 / N0; throws for N0 <= 0.
    double snr(cplx effective, double pt_w, double n0_w);

    RisPhaseProfile profile_for(const ChannelRealization &r, ProfileRule rule);

    // |g^T Theta h + h_SISO|^2 with Theta chosen by `rule`.
    double channel_gain(const ChannelRealization &r, ProfileRule rule);

    // Report over per-realization channel gains |effective|^2.
    RateReport rate_from_gains(std::span<const double> gains, double pt_w, double n0_w);

    RateReport achievable_rate(std::span<const ChannelRealization> stream, ProfileRule rule, double pt_w, double n0_w);

    // Per-realization gains generated on the fly (realizations are not retained).
    std::vector<double> channel_gains(const ChannelConfig &cfg, ProfileRule rule, unsigned threads = 0);

    // One generation pass for several rules; result[k][i] belongs to rules[k].
    std::vector<std::vector<double>> channel_gains(const ChannelConfig &cfg, std::span<const ProfileRule> rules,
                                                   unsigned threads = 0);

    RateReport achievable_rate(const ChannelConfig &cfg, ProfileRule rule, double pt_w, double n0_w,
                               unsigned threads = 0);

    struct RateRow
    {
        ProfileRule rule;
        double tx_power_dbw;
        RateReport report;
    };

    // One row per (rule, Pt); all rows share one generation pass.
    std::vector<RateRow> rate_table(const ChannelConfig &cfg, std::span<const ProfileRule> rules,
                                    std::span<const double> tx_power_dbw, double noise_dbm, unsigned threads = 0);

    std::vector<double> default_tx_power_sweep_dbw(); // -20 .. 10 dBW in 5 dB steps

    struct ScalingRow
    {
        std::size_t n_elements;
        double snr_db_optimal;
        double snr_db_random;
        double snr_db_off;
    };

    // Mean SNR per RIS size with every gated link forced to LOS and no
    // scattering.
    std::vector<ScalingRow> power_scaling_sweep(const ChannelConfig &cfg, std::span<const std::size_t> n_list,
                                                double pt_w, double n0_w, unsigned threads = 0);

    struct RxGrid
    {
        std::vector<double> x;
        std::vector<double> y;

        std::size_t size() const { return x.size() * y.size(); }

        friend bool operator==(const RxGrid &, const RxGrid &) = default;
    };

    struct HeatmapCell
    {
        double x = 0.0;
        double y = 0.0;
        std::uint64_t seed = 0; // substream used for this cell
        RateReport report;
    };

    struct Heatmap
    {
        RxGrid grid;
        std::vector<HeatmapCell> cells; // row-major: index = iy * nx + ix

        const HeatmapCell &at(std::size_t ix, std::size_t iy) const { return cells.at(iy * grid.x.size() + ix); }
    };

    std::uint64_t heatmap_cell_seed(std::uint64_t master_seed, std::size_t cell_index);

    // Configuration of one cell: Rx moved to (x, y) at the scenario's Rx
    // height, seed replaced by the cell substream.
    ChannelConfig heatmap_cell_config(const ChannelConfig &cfg, const RxGrid &grid, std::size_t cell_index);

    using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

    // Throws ScenarioError when a grid point fails validation.
    Heatmap rate_heatmap(const ChannelConfig &cfg, const RxGrid &grid, ProfileRule rule, double pt_w, double n0_w,
                         unsigned threads = 0, const ProgressFn &progress = {});
}

#endif
