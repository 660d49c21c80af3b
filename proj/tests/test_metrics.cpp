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
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace simris;
using doctest::Approx;

TEST_CASE("snr")
{
    CHECK(snr(cplx(1.0, 0.0), 1.0, 1.0) == 1.0);
    CHECK(snr(cplx(0.6, 0.8), 2.0, 0.5) == Approx(4.0).epsilon(1e-15));
    CHECK(snr(cplx(1e-3, 0.0), 3.0, 1.0) == Approx(3e-6).epsilon(1e-15));
    CHECK(dbm_to_watts(-100.0) == Approx(1e-13).epsilon(1e-12));
    CHECK_THROWS_AS(snr(cplx(1.0), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(snr(cplx(1.0), 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("rate report from gains")
{
    SUBCASE("constant SNR")
    {
        const std::vector<double> one(10, 1.0), three(10, 3.0);
        const RateReport a = rate_from_gains(one, 1.0, 1.0);
        CHECK(a.mean_rate == Approx(1.0).epsilon(1e-15));
        CHECK(a.rate_std == 0.0);
        CHECK(a.rate_stderr == 0.0);
        CHECK(a.mean_snr_db == Approx(0.0));
        CHECK(a.count == 10);
        CHECK(a.tx_power_dbm == Approx(30.0).epsilon(1e-15));
        CHECK(rate_from_gains(three, 1.0, 1.0).mean_rate == Approx(2.0).epsilon(1e-15));
    }
    SUBCASE("sample statistics")
    {
        const std::vector<double> gains{0.0, 1.0, 3.0, 7.0};
        const RateReport r = rate_from_gains(gains, 1.0, 1.0);
        CHECK(r.mean_rate == Approx(1.5).epsilon(1e-15));
        const double var = (2.25 + 0.25 + 0.25 + 2.25) / 3.0;
        CHECK(r.rate_std == Approx(std::sqrt(var)).epsilon(1e-14));
        CHECK(r.rate_stderr == Approx(std::sqrt(var) / 2.0).epsilon(1e-14));
        CHECK(r.mean_snr_db == Approx(10.0 * std::log10(2.75)).epsilon(1e-14));
    }
    SUBCASE("all-zero gains")
    {
        const std::vector<double> zero(3, 0.0);
        const RateReport r = rate_from_gains(zero, 1.0, 1e-13);
        CHECK(r.mean_rate == 0.0);
        CHECK(r.mean_snr_db == -std::numeric_limits<double>::infinity());
        CHECK(r.noise_dbm == Approx(-100.0).epsilon(1e-12));
    }
    const std::vector<double> none;
    CHECK_THROWS_AS(rate_from_gains(none, 1.0, 1.0), std::invalid_argument);
    const std::vector<double> some(2, 1.0);
    CHECK_THROWS_AS(rate_from_gains(some, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("profile rule names round-trip")
{
    for (ProfileRule r : {ProfileRule::Off, ProfileRule::Random, ProfileRule::Optimal})
        CHECK(parse_profile_rule(to_string(r)) == r);
    CHECK_FALSE(parse_profile_rule("best").has_value());
}

TEST_CASE("achievable rate over a stream matches the config overload")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(1.5, 64), 100, 91);
    const auto all = generate(cfg, 1);
    for (ProfileRule rule : {ProfileRule::Off, ProfileRule::Random, ProfileRule::Optimal})
    {
        const RateReport a = achievable_rate(all, rule, 1.0, 1e-13);
        const RateReport b = achievable_rate(cfg, rule, 1.0, 1e-13, 2);
        CHECK(a.mean_rate == b.mean_rate);
        CHECK(a.rate_std == b.rate_std);
        CHECK(a.mean_snr_db == b.mean_snr_db);
    }
}

TEST_CASE("rate table rows agree with per-rule gains")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(2.0, 64), 200, 92);
    const std::vector<ProfileRule> rules{ProfileRule::Optimal, ProfileRule::Random, ProfileRule::Off};
    const auto powers = default_tx_power_sweep_dbw();
    REQUIRE(powers == std::vector<double>{-20, -15, -10, -5, 0, 5, 10});
    const auto rows = rate_table(cfg, rules, powers, -100.0, 1);
    REQUIRE(rows.size() == rules.size() * powers.size());
    for (std::size_t k = 0; k < rules.size(); ++k)
    {
        const auto gains = channel_gains(cfg, rules[k], 1);
        for (std::size_t p = 0; p < powers.size(); ++p)
        {
            const RateRow &row = rows[k * powers.size() + p];
            CHECK(row.rule == rules[k]);
            CHECK(row.tx_power_dbw == powers[p]);
            CHECK(row.report.mean_rate ==
                  rate_from_gains(gains, db_to_linear(powers[p]), dbm_to_watts(-100.0)).mean_rate);
            if (p > 0)
                CHECK(row.report.mean_rate > rows[k * powers.size() + p - 1].report.mean_rate);
        }
    }
}

TEST_CASE("high-mounted RIS with optimal phases beats the direct link alone")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(2.0), 300, 93);
    const std::vector<ProfileRule> rules{ProfileRule::Optimal, ProfileRule::Off};
    const std::vector<double> powers{0.0};
    const auto rows = rate_table(cfg, rules, powers, -100.0);
    const RateReport &opt = rows[0].report, &off = rows[1].report;
    CHECK(opt.mean_rate - off.mean_rate > 3.0 * std::hypot(opt.rate_stderr, off.rate_stderr));
}

TEST_CASE("doubling the power adds one bit at high SNR")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(2.0, 64), 200, 94);
    const auto gains = channel_gains(cfg, ProfileRule::Optimal, 1);
    double min_gain = gains[0];
    for (double g : gains)
        min_gain = std::min(min_gain, g);
    const double n0 = 1e-13;
    const double pt = 100.0 * n0 / min_gain; // every realization at 20 dB or more
    const double gap = rate_from_gains(gains, 2.0 * pt, n0).mean_rate - rate_from_gains(gains, pt, n0).mean_rate;
    CHECK(gap == Approx(1.0).epsilon(0.01));
}

TEST_CASE("rates are invariant to a common rotation of the channel")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(1.5, 16), 50, 95);
    const cplx rot = std::polar(1.0, 0.77);
    for (const auto &r : generate(cfg, 1))
    {
        ChannelRealization s = r;
        for (auto &x : s.h)
            x *= rot;
        s.h_siso *= rot;
        CHECK(channel_gain(s, ProfileRule::Optimal) == Approx(channel_gain(r, ProfileRule::Optimal)).epsilon(1e-12));
        CHECK(channel_gain(s, ProfileRule::Off) == Approx(channel_gain(r, ProfileRule::Off)).epsilon(1e-12));
    }
}

TEST_CASE("power scaling sweep")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(2.0), 50, 96);
    cfg.scenario.direct_link_present = false;
    cfg.shadowing = false;
    const std::vector<std::size_t> sizes{16, 64};
    const auto rows = power_scaling_sweep(cfg, sizes, 1.0, 1e-13, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n_elements == 16);
    CHECK(rows[0].snr_db_off == -std::numeric_limits<double>::infinity());
    for (const auto &r : rows)
        CHECK(r.snr_db_optimal > r.snr_db_random);
    CHECK(rows[1].snr_db_optimal - rows[0].snr_db_optimal == Approx(20.0 * std::log10(4.0)).epsilon(0.02));
}

TEST_CASE("heatmap cells")
{
    const ChannelConfig cfg = test::config_for(test::outdoor_side(16), 20, 97);
    const RxGrid grid{{40.0, 50.0, 60.0}, {60.0, 70.0}};
    CHECK(grid.size() == 6);

    SUBCASE("cell configuration is row-major")
    {
        const ChannelConfig c = heatmap_cell_config(cfg, grid, 4);
        CHECK(c.scenario.rx.x == 50.0);
        CHECK(c.scenario.rx.y == 70.0);
        CHECK(c.scenario.rx.z == cfg.scenario.rx.z);
        CHECK(c.seed == heatmap_cell_seed(97, 4));
        CHECK(heatmap_cell_seed(97, 4) != heatmap_cell_seed(97, 5));
        CHECK_THROWS_AS(heatmap_cell_config(cfg, grid, 6), std::out_of_range);
    }
    SUBCASE("each cell equals a standalone evaluation")
    {
        std::size_t calls = 0;
        const Heatmap hm = rate_heatmap(cfg, grid, ProfileRule::Optimal, 1.0, 1e-13, 2,
                                        [&](std::size_t done, std::size_t total) {
                                            ++calls;
                                            CHECK(done == calls);
                                            CHECK(total == 6);
                                        });
        CHECK(calls == 6);
        for (std::size_t iy = 0; iy < 2; ++iy)
            for (std::size_t ix = 0; ix < 3; ++ix)
            {
                const HeatmapCell &cell = hm.at(ix, iy);
                CHECK(cell.x == grid.x[ix]);
                CHECK(cell.y == grid.y[iy]);
                const ChannelConfig c = heatmap_cell_config(cfg, grid, iy * 3 + ix);
                CHECK(cell.seed == c.seed);
                CHECK(cell.report.mean_rate == achievable_rate(c, ProfileRule::Optimal, 1.0, 1e-13, 1).mean_rate);
            }
    }
    SUBCASE("invalid grid points are rejected up front")
    {
        const RxGrid bad{{40.0, 500.0}, {60.0}};
        CHECK_THROWS_AS(rate_heatmap(cfg, bad, ProfileRule::Off, 1.0, 1e-13), ScenarioError);
        CHECK_THROWS_AS(rate_heatmap(cfg, RxGrid{}, ProfileRule::Off, 1.0, 1e-13), std::invalid_argument);
    }
}
