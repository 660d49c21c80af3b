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

#include "simris/channel.hpp"
#include "simris/ris_control.hpp"
#include "support.hpp"

#include <doctest.h>

#include <chrono>
#include <cmath>

using namespace simris;
using doctest::Approx;

namespace
{
    double power(const std::vector<cplx> &v)
    {
        double p = 0.0;
        for (const auto &x : v)
            p += std::norm(x);
        return p;
    }

    bool same(const ChannelRealization &a, const ChannelRealization &b)
    {
        return a.h == b.h && a.g == b.g && a.h_siso == b.h_siso;
    }
}

TEST_CASE("Tx-RIS channel with a forced LOS ray only")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(1.5), 1, 51);
    cfg.wavefront = Wavefront::Planar;
    cfg.los_mode = LosMode::AlwaysLos;
    cfg.scattering = false;
    cfg.link.gt = 2.0;
    cfg.link.efficiency = 0.8;
    const Scenario &s = cfg.scenario;
    for (std::size_t i = 0; i < 20; ++i)
    {
        Rng rng = stream_rng(cfg.seed, i, Stream::TxRis);
        const LinkSample h = gen_h(rng, cfg);
        REQUIRE(h.los.los);
        const double d = distance(s.tx, s.ris);
        const double ge = element_gain(local_angles(s.ris, s.wall, s.tx));
        const double l = test::ci_oracle(28.0, cfg.path_loss.los.exponent, d, h.los.shadow_db);
        CHECK(power(h.v) == Approx(1.6 * 256.0 * ge * l).epsilon(1e-12));
        for (const auto &x : h.v)
            CHECK(std::abs(x) == Approx(std::abs(h.v[0])).epsilon(1e-12));
    }
}

TEST_CASE("Tx-RIS channel without LOS matches the cluster power sum")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(1.5, 16), 1, 52);
    cfg.wavefront = Wavefront::Planar;
    cfg.los_mode = LosMode::NeverLos;
    const Scenario &s = cfg.scenario;
    double sim = 0.0, expected = 0.0;
    constexpr std::size_t draws = 10000;
    for (std::size_t i = 0; i < draws; ++i)
    {
        Rng rng = stream_rng(cfg.seed, i, Stream::TxRis);
        const LinkSample h = gen_h(rng, cfg);
        CHECK_FALSE(h.los.los);
        sim += power(h.v);
        double sum = 0.0;
        for (const auto &c : h.clusters.clusters)
            for (const auto &sr : c.subrays)
                sum += element_gain(local_angles(s.ris, s.wall, sr.position)) * sr.attenuation;
        expected += 16.0 * h.clusters.gamma * h.clusters.gamma * sum;
    }
    CHECK(sim / expected == Approx(1.0).epsilon(0.03));
}

TEST_CASE("high-mounted indoor RIS always sees the Tx")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(2.0, 1), 1, 53);
    for (std::size_t i = 0; i < 1000; ++i)
    {
        Rng rng = stream_rng(cfg.seed, i, Stream::TxRis);
        const LinkSample h = gen_h(rng, cfg);
        CHECK(h.los.los);
        CHECK(h.los.probability == 1.0);
    }
}

TEST_CASE("LOS gating frequency follows the LOS probability")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(1.5, 1), 1, 54);
    double hits = 0.0, p = 0.0;
    constexpr std::size_t draws = 20000;
    for (std::size_t i = 0; i < draws; ++i)
    {
        Rng rng = stream_rng(cfg.seed, i, Stream::TxRis);
        const LinkSample h = gen_h(rng, cfg);
        hits += h.los.los ? 1.0 : 0.0;
        p = h.los.probability;
        CHECK((power(h.v) > 0.0));
    }
    CHECK(p == Approx(0.32 * std::exp(-(distance(cfg.scenario.tx, cfg.scenario.ris) - 6.5) / 32.9)).epsilon(1e-12));
    CHECK(std::abs(hits / draws - p) < 0.01);
}

TEST_CASE("indoor RIS-Rx channel is a single LOS ray")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(2.0), 1, 55);
    cfg.wavefront = Wavefront::Planar;
    cfg.link.gr = 1.3;
    const Scenario &s = cfg.scenario;
    Rng rng = stream_rng(cfg.seed, 0, Stream::RisRx);
    const LinkSample g = gen_g_indoor(rng, cfg);
    CHECK(distance(s.ris, s.rx) == 3.0);
    for (const auto &x : g.v)
        CHECK(std::abs(x) == Approx(std::abs(g.v[0])).epsilon(1e-13));
    const double ge = element_gain(local_angles(s.ris, s.wall, s.rx));
    const double l = test::ci_oracle(28.0, cfg.path_loss.los.exponent, 3.0, g.los.shadow_db);
    CHECK(power(g.v) == Approx(1.3 * 256.0 * ge * l).epsilon(1e-12));

    ChannelConfig outdoor = test::config_for(test::outdoor_side(), 1, 55);
    CHECK_THROWS_AS(gen_g_indoor(rng, outdoor), std::invalid_argument);
}

TEST_CASE("outdoor RIS-Rx channel")
{
    SUBCASE("zero scattering and forced LOS reduce to the LOS ray")
    {
        ChannelConfig cfg = test::config_for(test::outdoor_side(), 1, 56);
        cfg.scattering = false;
        cfg.los_mode = LosMode::AlwaysLos;
        const Scenario &s = cfg.scenario;
        Rng rng = stream_rng(cfg.seed, 0, Stream::RisRx);
        const LinkSample g = gen_g_outdoor(rng, cfg);
        const double d = distance(s.ris, s.rx);
        const auto ref = los_response(cfg, s.rx, test::ci_oracle(28.0, cfg.path_loss.los.exponent, d, g.los.shadow_db), g.los.eta);
        CHECK(test::max_abs_diff(g.v, ref) < 1e-12 * test::max_abs(ref));
    }
    SUBCASE("expected power matches the cluster sum plus the LOS term")
    {
        ChannelConfig cfg = test::config_for(test::outdoor_side(16), 1, 57);
        cfg.wavefront = Wavefront::Planar;
        const Scenario &s = cfg.scenario;
        double sim = 0.0, expected = 0.0;
        for (std::size_t i = 0; i < 10000; ++i)
        {
            Rng rng = stream_rng(cfg.seed, i, Stream::RisRx);
            const LinkSample g = gen_g_outdoor(rng, cfg);
            CHECK(g.clusters.link == LinkKind::RisRx);
            sim += power(g.v);
            double sum = 0.0;
            for (const auto &c : g.clusters.clusters)
                for (const auto &sr : c.subrays)
                    sum += element_gain(local_angles(s.ris, s.wall, sr.position)) * sr.attenuation;
            double los = 0.0;
            if (g.los.los)
                los = element_gain(local_angles(s.ris, s.wall, s.rx)) *
                      test::ci_oracle(28.0, cfg.path_loss.los.exponent, distance(s.ris, s.rx), g.los.shadow_db);
            expected += 16.0 * (g.clusters.gamma * g.clusters.gamma * sum + los);
        }
        CHECK(sim / expected == Approx(1.0).epsilon(0.03));
    }
}

TEST_CASE("indoor direct link")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(1.5), 1, 58);
    const Scenario &s = cfg.scenario;

    SUBCASE("shares the Tx-RIS clusters")
    {
        for (std::size_t i = 0; i < 50; ++i)
        {
            Rng rh = stream_rng(cfg.seed, i, Stream::TxRis);
            const LinkSample h = gen_h(rh, cfg);
            Rng rs = stream_rng(cfg.seed, i, Stream::TxRx);
            const SisoSample siso = gen_hsiso_indoor(rs, cfg, h.clusters);
            CHECK(siso.clusters.clusters.empty());
            CHECK(siso.h == realization(cfg, i).h_siso);
        }
    }
    SUBCASE("Rx at the RIS sees no excess phase")
    {
        ChannelConfig c = cfg;
        c.scenario.rx = s.ris;
        c.los_mode = LosMode::NeverLos;
        c.link.gt = 2.0;
        c.link.gr = 3.0;
        Rng rh = stream_rng(c.seed, 0, Stream::TxRis);
        const LinkSample h = gen_h(rh, c);
        Rng rs = stream_rng(c.seed, 0, Stream::TxRx);
        const SisoSample siso = gen_hsiso_indoor(rs, c, h.clusters);
        cplx expected = 0.0;
        for (const auto &cl : h.clusters.clusters)
            for (const auto &sr : cl.subrays)
            {
                const double travel = distance(c.scenario.tx, sr.position) + distance(sr.position, c.scenario.rx);
                expected += sr.beta * std::sqrt(test::ci_oracle(28.0, c.path_loss.nlos.exponent, travel, cl.shadow_db));
            }
        expected *= h.clusters.gamma * std::sqrt(6.0);
        CHECK(std::abs(siso.h - expected) < 1e-12 * std::abs(expected));
    }
    SUBCASE("LOS only gives the Friis power")
    {
        ChannelConfig c = cfg;
        c.scattering = false;
        c.los_mode = LosMode::AlwaysLos;
        Rng rh = stream_rng(c.seed, 0, Stream::TxRis);
        const LinkSample h = gen_h(rh, c);
        Rng rs = stream_rng(c.seed, 0, Stream::TxRx);
        const SisoSample siso = gen_hsiso_indoor(rs, c, h.clusters);
        CHECK(std::norm(siso.h) == Approx(test::friis_oracle(s.lambda(), distance(s.tx, s.rx))).epsilon(1e-13));
    }
    SUBCASE("blocked")
    {
        ChannelConfig c = cfg;
        c.scenario.direct_link_present = false;
        for (std::size_t i = 0; i < 20; ++i)
            CHECK(realization(c, i).h_siso == cplx(0.0));
    }
}

TEST_CASE("outdoor direct link")
{
    ChannelConfig cfg = test::config_for(test::outdoor_side(16), 1, 59);
    const Scenario &s = cfg.scenario;

    SUBCASE("independent of the cascaded channel")
    {
        constexpr std::size_t n = 10000;
        std::vector<cplx> a(n), b(n);
        cplx ma = 0.0, mb = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const ChannelRealization r = realization(cfg, i);
            a[i] = r.h_siso;
            for (std::size_t k = 0; k < r.h.size(); ++k)
                b[i] += r.g[k] * r.h[k];
            ma += a[i];
            mb += b[i];
        }
        ma /= double(n);
        mb /= double(n);
        cplx cov = 0.0;
        double va = 0.0, vb = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            cov += (a[i] - ma) * std::conj(b[i] - mb);
            va += std::norm(a[i] - ma);
            vb += std::norm(b[i] - mb);
        }
        CHECK(std::abs(cov) / std::sqrt(va * vb) < 0.05);
    }
    SUBCASE("zero scattering and forced LOS give the free-space scalar")
    {
        ChannelConfig c = cfg;
        c.scattering = false;
        c.los_mode = LosMode::AlwaysLos;
        Rng rs = stream_rng(c.seed, 0, Stream::TxRx);
        const SisoSample siso = gen_hsiso_outdoor(rs, c);
        const double d = distance(s.tx, s.rx);
        CHECK(std::abs(siso.h - std::sqrt(test::friis_oracle(s.lambda(), d)) * std::polar(1.0, -s.k() * d)) < 1e-15);
    }
    SUBCASE("blocked")
    {
        ChannelConfig c = cfg;
        c.scenario.direct_link_present = false;
        for (std::size_t i = 0; i < 20; ++i)
            CHECK(realization(c, i).h_siso == cplx(0.0));
    }
}

TEST_CASE("realizations are deterministic and order independent")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(1.5, 64), 64, 60);
    const auto seq = generate(cfg, 1);
    const auto par = generate(cfg, 4);
    REQUIRE(seq.size() == 64);
    RealizationStream stream = realize(cfg);
    for (std::size_t i = 0; i < seq.size(); ++i)
    {
        CHECK(same(seq[i], par[i]));
        CHECK(same(seq[i], realization(cfg, i)));
        CHECK(same(seq[i], stream.next()));
    }
    CHECK(stream.done());
    CHECK_THROWS_AS(stream.next(), std::out_of_range);

    ChannelConfig other = cfg;
    other.seed = 61;
    CHECK_FALSE(same(realization(other, 0), seq[0]));
}

TEST_CASE("invalid configurations are rejected before generation")
{
    ChannelConfig cfg = test::config_for(test::indoor_side(), 10, 1);
    cfg.scenario.rx.z = 2.5;
    CHECK_THROWS_AS(realize(cfg), ScenarioError);
    try
    {
        generate(cfg);
    }
    catch (const ScenarioError &e)
    {
        REQUIRE(e.violations().size() == 1);
        CHECK(e.violations()[0].code == violation::rx_too_high);
    }
    ChannelConfig zero = test::config_for(test::indoor_side(), 0, 1);
    CHECK_THROWS_AS(check_config(zero), std::invalid_argument);
    ChannelConfig eff = test::config_for(test::indoor_side(), 1, 1);
    eff.link.efficiency = 1.5;
    CHECK_THROWS_AS(check_config(eff), std::invalid_argument);
}

TEST_CASE("effective channel")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(2.0, 16), 1, 62);
    const ChannelRealization r = realization(cfg, 0);
    CHECK(effective_channel(r, off_profile(16)) == r.h_siso);

    ChannelRealization one;
    one.h = {cplx(0.3, 0.1)};
    one.g = {cplx(-0.2, 0.5)};
    one.h_siso = cplx(0.05, 0.0);
    const RisPhaseProfile p({0.7}, {1.1});
    CHECK(std::abs(effective_channel(one, p) - (one.g[0] * std::polar(0.7, 1.1) * one.h[0] + one.h_siso)) < 1e-16);

    Rng rng(63);
    RisPhaseProfile a = random_phases(rng, 16), half = a;
    for (auto &m : half.magnitude)
        m = 0.5;
    CHECK(std::abs((effective_channel(r, half) - r.h_siso) - 0.5 * (effective_channel(r, a) - r.h_siso)) <
          1e-12 * std::abs(effective_channel(r, a)));
    CHECK_THROWS_AS(effective_channel(r, off_profile(4)), std::invalid_argument);
}

TEST_CASE("a thousand full-size indoor realizations fit the time budget")
{
    const ChannelConfig cfg = test::config_for(test::indoor_side(2.0), 1000, 64);
    const auto t0 = std::chrono::steady_clock::now();
    const auto all = generate(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(all.size() == 1000);
    CHECK(secs < 60.0);
}

TEST_CASE("wavefront and LOS mode names round-trip")
{
    for (Wavefront w : {Wavefront::Auto, Wavefront::Planar, Wavefront::Spherical})
        CHECK(parse_wavefront(to_string(w)) == w);
    for (LosMode m : {LosMode::Stochastic, LosMode::AlwaysLos, LosMode::NeverLos})
        CHECK(parse_los_mode(to_string(m)) == m);
}
