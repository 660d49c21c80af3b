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
#include "simris/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace simris
{
    namespace
    {
        constexpr double two_pi = 2.0 * pi;

        LosDraw draw_los(Rng &rng, const ChannelConfig &cfg, double d, std::optional<double> ris_height,
                         bool gated)
        {
            LosDraw out;
            out.probability = gated ? los_probability(cfg.scenario.environment, d, ris_height) : 1.0;
            const bool indicator = sample_los_indicator(rng, out.probability);
            switch (cfg.los_mode)
            {
            case LosMode::AlwaysLos:
                out.los = true;
                break;
            case LosMode::NeverLos:
                out.los = !gated;
                break;
            default:
                out.los = indicator;
            }
            if (!gated)
                out.los = true;
            out.eta = rng.uniform(0.0, two_pi);
            const double shadow = sample_shadowing_db(rng, cfg.path_loss.los.sigma_db);
            out.shadow_db = cfg.shadowing ? shadow : 0.0;
            return out;
        }

        double los_attenuation(const ChannelConfig &cfg, double d, double shadow_db)
        {
            return ci_path_loss(cfg.path_loss, std::max(d, cfg.path_loss.reference_distance), true, shadow_db);
        }

        void scale(std::vector<cplx> &v, double s)
        {
            for (auto &x : v)
                x *= s;
        }

        void require_environment(const ChannelConfig &cfg, Environment env, const char *who)
        {
            if (cfg.scenario.environment != env)
                throw std::invalid_argument(std::string(who) + ": wrong environment for this channel model.");
        }

        void require_square(const Scenario &scn)
        {
            if (scn.side() == 0)
                throw std::invalid_argument("Number of RIS elements must be a nonzero perfect square.");
        }
    }

    std::string_view to_string(Wavefront w)
    {
        switch (w)
        {
        case Wavefront::Planar:
            return "planar";
        case Wavefront::Spherical:
            return "spherical";
        default:
            return "auto";
        }
    }

    std::optional<Wavefront> parse_wavefront(std::string_view text)
    {
        if (text == "auto")
            return Wavefront::Auto;
        if (text == "planar")
            return Wavefront::Planar;
        if (text == "spherical")
            return Wavefront::Spherical;
        return std::nullopt;
    }

    std::string_view to_string(LosMode m)
    {
        switch (m)
        {
        case LosMode::AlwaysLos:
            return "always";
        case LosMode::NeverLos:
            return "never";
        default:
            return "stochastic";
        }
    }

    std::optional<LosMode> parse_los_mode(std::string_view text)
    {
        if (text == "stochastic")
            return LosMode::Stochastic;
        if (text == "always")
            return LosMode::AlwaysLos;
        if (text == "never")
            return LosMode::NeverLos;
        return std::nullopt;
    }

    ChannelConfig ChannelConfig::for_scenario(const Scenario &scn)
    {
        ChannelConfig cfg;
        cfg.scenario = scn;
        cfg.link = LinkBudgetParams::for_frequency(scn.frequency_ghz);
        cfg.path_loss = default_path_loss_model(scn.environment, scn.frequency_ghz);
        cfg.cluster_stats = ClusterStatistics::defaults(scn.frequency_ghz);
        return cfg;
    }

    void check_config(const ChannelConfig &cfg)
    {
        auto violations = validate_scenario(cfg.scenario);
        if (!violations.empty())
        {
            std::string what = "Invalid scenario:";
            for (const auto &v : violations)
                what += " " + v.code;
            throw ScenarioError(what, std::move(violations));
        }
        if (cfg.realizations == 0)
            throw std::invalid_argument("Realization count must be at least 1.");
        if (cfg.path_loss.environment != cfg.scenario.environment ||
            cfg.path_loss.frequency_ghz != cfg.scenario.frequency_ghz)
            throw std::invalid_argument("Path-loss model does not match the scenario environment/frequency.");
        if (std::abs(cfg.link.lambda - cfg.scenario.lambda()) > 1e-12 * cfg.scenario.lambda())
            throw std::invalid_argument("Link-budget wavelength does not match the scenario frequency.");
        if (!(cfg.link.efficiency > 0.0 && cfg.link.efficiency <= 1.0))
            throw std::invalid_argument("Re-radiation efficiency must lie in (0, 1].");
        if (!(cfg.link.gt > 0.0 && cfg.link.gr > 0.0))
            throw std::invalid_argument("Antenna gains must be positive.");
        if (cfg.fixed_element_gain && !(*cfg.fixed_element_gain >= 0.0))
            throw std::invalid_argument("Fixed element gain must be non-negative.");
        if (cfg.cluster_stats.max_subrays == 0 || !(cfg.cluster_stats.mean_clusters >= 0.0))
            throw std::invalid_argument("Invalid cluster statistics.");
    }

    Rng stream_rng(std::uint64_t seed, std::size_t index, Stream stream)
    {
        return Rng(derive_seed(seed, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(stream)));
    }

    double element_gain(const ChannelConfig &cfg, const LocalAngles &ang)
    {
        if (cfg.fixed_element_gain)
            return *cfg.fixed_element_gain;
        return element_gain(ang);
    }

    void accumulate_ray(std::span<cplx> out, const ChannelConfig &cfg, const Point3 &source, cplx coeff,
                        double attenuation, bool is_los)
    {
        const Scenario &scn = cfg.scenario;
        if (out.size() != scn.n_elements)
            throw std::invalid_argument("accumulate_ray: output length does not match the RIS size.");
        if (coeff == cplx{0.0} || attenuation == 0.0)
            return;

        const double b_ref = distance(source, scn.ris);
        const LocalAngles ang_ref = local_angles(scn.ris, scn.wall, source);

        bool exact_phase = cfg.wavefront == Wavefront::Spherical;
        if (cfg.wavefront == Wavefront::Auto)
        {
            const double d = aperture(scn);
            const double fraunhofer = 2.0 * d * d / scn.lambda();
            exact_phase = is_los || b_ref < fraunhofer;
        }

        if (!exact_phase)
        {
            const cplx w = coeff * std::sqrt(element_gain(cfg, ang_ref) * attenuation);
            const std::vector<cplx> a = array_response(scn, ang_ref);
            for (std::size_t n = 0; n < out.size(); ++n)
                out[n] += w * a[n];
            return;
        }

        const double k = scn.k();
        std::vector<double> b(out.size());
        double b_min = b_ref, b_max = b_ref;
        for (std::size_t n = 0; n < out.size(); ++n)
        {
            b[n] = distance(source, element_position(scn, n));
            b_min = std::min(b_min, b[n]);
            b_max = std::max(b_max, b[n]);
        }

        const bool per_element_amplitude =
            cfg.wavefront == Wavefront::Spherical || (b_max - b_min) >= spherical_amplitude_threshold * b_ref;

        const double amp_ref = std::sqrt(element_gain(cfg, ang_ref) * attenuation);
        for (std::size_t n = 0; n < out.size(); ++n)
        {
            double amp = amp_ref;
            if (per_element_amplitude)
            {
                if (!(b[n] > 0.0))
                    throw std::invalid_argument("accumulate_ray: source coincides with an RIS element.");
                const LocalAngles ang = local_angles(element_position(scn, n), scn.wall, source);
                amp = std::sqrt(element_gain(cfg, ang) * attenuation) * (b_ref / b[n]);
            }
            out[n] += coeff * amp * std::polar(1.0, -k * (b[n] - b_ref));
        }
    }

    std::vector<cplx> cluster_response(const ChannelConfig &cfg, const ClusterSet &clusters)
    {
        if (clusters.link == LinkKind::TxRx)
            throw std::invalid_argument("cluster_response: the Tx-Rx cluster set has no RIS response.");
        std::vector<cplx> v(cfg.scenario.n_elements, cplx{0.0});
        for (const auto &c : clusters.clusters)
            for (const auto &s : c.subrays)
                accumulate_ray(v, cfg, s.position, clusters.gamma * s.beta, s.attenuation, false);
        return v;
    }

    std::vector<cplx> los_response(const ChannelConfig &cfg, const Point3 &source, double attenuation, double phase)
    {
        std::vector<cplx> v(cfg.scenario.n_elements, cplx{0.0});
        accumulate_ray(v, cfg, source, std::polar(1.0, phase), attenuation, true);
        return v;
    }

    LinkSample gen_h(Rng &rng, const ChannelConfig &cfg)
    {
        const Scenario &scn = cfg.scenario;
        require_square(scn);
        LinkSample out;
        out.clusters = sample_cluster_geometry(rng, scn, LinkKind::TxRis, cfg.cluster_stats, cfg.path_loss,
                                               cfg.shadowing);
        const double d = distance(scn.tx, scn.ris);
        out.los = draw_los(rng, cfg, d, scn.ris.z, true);

        out.v = cfg.scattering ? cluster_response(cfg, out.clusters)
                               : std::vector<cplx>(scn.n_elements, cplx{0.0});
        if (out.los.los)
            accumulate_ray(out.v, cfg, scn.tx, std::polar(1.0, out.los.eta), los_attenuation(cfg, d, out.los.shadow_db),
                           true);
        scale(out.v, std::sqrt(cfg.link.gt * cfg.link.efficiency));
        return out;
    }

    LinkSample gen_g_indoor(Rng &rng, const ChannelConfig &cfg)
    {
        require_environment(cfg, Environment::InH, "gen_g_indoor");
        const Scenario &scn = cfg.scenario;
        require_square(scn);
        LinkSample out;
        out.clusters.link = LinkKind::RisRx;
        const double d = distance(scn.ris, scn.rx);
        out.los = draw_los(rng, cfg, d, std::nullopt, false);
        out.v = los_response(cfg, scn.rx, los_attenuation(cfg, d, out.los.shadow_db), out.los.eta);
        scale(out.v, std::sqrt(cfg.link.gr));
        return out;
    }

    LinkSample gen_g_outdoor(Rng &rng, const ChannelConfig &cfg)
    {
        require_environment(cfg, Environment::UMi, "gen_g_outdoor");
        const Scenario &scn = cfg.scenario;
        require_square(scn);
        LinkSample out;
        out.clusters = sample_cluster_geometry(rng, scn, LinkKind::RisRx, cfg.cluster_stats, cfg.path_loss,
                                               cfg.shadowing);
        const double d = distance(scn.ris, scn.rx);
        out.los = draw_los(rng, cfg, d, scn.ris.z, true);

        out.v = cfg.scattering ? cluster_response(cfg, out.clusters)
                               : std::vector<cplx>(scn.n_elements, cplx{0.0});
        if (out.los.los)
            accumulate_ray(out.v, cfg, scn.rx, std::polar(1.0, out.los.eta), los_attenuation(cfg, d, out.los.shadow_db),
                           true);
        scale(out.v, std::sqrt(cfg.link.gr));
        return out;
    }

    namespace
    {
        cplx direct_los_term(const ChannelConfig &cfg, const LosDraw &los)
        {
            if (!los.los)
                return 0.0;
            const Scenario &scn = cfg.scenario;
            const double d = distance(scn.tx, scn.rx);
            return std::sqrt(friis_attenuation(scn.lambda(), d)) * std::polar(1.0, -scn.k() * d);
        }
    }

    SisoSample gen_hsiso_indoor(Rng &rng, const ChannelConfig &cfg, const ClusterSet &shared)
    {
        require_environment(cfg, Environment::InH, "gen_hsiso_indoor");
        if (shared.link != LinkKind::TxRis)
            throw std::invalid_argument("gen_hsiso_indoor: shared clusters must come from the Tx-RIS link.");
        const Scenario &scn = cfg.scenario;
        SisoSample out;
        out.clusters.link = LinkKind::TxRx;
        if (!scn.direct_link_present)
            return out;

        out.los = draw_los(rng, cfg, distance(scn.tx, scn.rx), std::nullopt, true);
        out.los.shadow_db = 0.0;

        const double k = scn.k();
        cplx scattered = 0.0;
        if (cfg.scattering)
            for (const auto &c : shared.clusters)
                for (const auto &s : c.subrays)
                {
                    const double excess = k * (distance(s.position, scn.rx) - distance(s.position, scn.ris));
                    const double l = subray_attenuation(scn, LinkKind::TxRx, cfg.path_loss, s.position, c.shadow_db);
                    scattered += s.beta * std::polar(1.0, excess) * std::sqrt(l);
                }
        out.h = (shared.gamma * scattered + direct_los_term(cfg, out.los)) * std::sqrt(cfg.link.gt * cfg.link.gr);
        return out;
    }

    SisoSample gen_hsiso_outdoor(Rng &rng, const ChannelConfig &cfg)
    {
        require_environment(cfg, Environment::UMi, "gen_hsiso_outdoor");
        const Scenario &scn = cfg.scenario;
        SisoSample out;
        out.clusters.link = LinkKind::TxRx;
        if (!scn.direct_link_present)
            return out;

        out.clusters = sample_cluster_geometry(rng, scn, LinkKind::TxRx, cfg.cluster_stats, cfg.path_loss,
                                               cfg.shadowing);
        out.los = draw_los(rng, cfg, distance(scn.tx, scn.rx), std::nullopt, true);
        out.los.shadow_db = 0.0;

        cplx scattered = 0.0;
        if (cfg.scattering)
            for (const auto &c : out.clusters.clusters)
                for (const auto &s : c.subrays)
                    scattered += s.beta * std::sqrt(s.attenuation);
        out.h = (out.clusters.gamma * scattered + direct_los_term(cfg, out.los)) * std::sqrt(cfg.link.gt * cfg.link.gr);
        return out;
    }

    ChannelRealization realization(const ChannelConfig &cfg, std::size_t index)
    {
        ChannelRealization r;
        r.seed = cfg.seed;
        r.index = index;

        Rng rng_h = stream_rng(cfg.seed, index, Stream::TxRis);
        LinkSample h = gen_h(rng_h, cfg);

        Rng rng_g = stream_rng(cfg.seed, index, Stream::RisRx);
        LinkSample g = cfg.scenario.environment == Environment::InH ? gen_g_indoor(rng_g, cfg)
                                                                    : gen_g_outdoor(rng_g, cfg);

        Rng rng_s = stream_rng(cfg.seed, index, Stream::TxRx);
        SisoSample s = cfg.scenario.environment == Environment::InH ? gen_hsiso_indoor(rng_s, cfg, h.clusters)
                                                                    : gen_hsiso_outdoor(rng_s, cfg);

        r.h = std::move(h.v);
        r.g = std::move(g.v);
        r.h_siso = s.h;
        r.los_h = h.los;
        r.los_g = g.los;
        r.los_siso = s.los;
        return r;
    }

    RealizationStream::RealizationStream(ChannelConfig cfg) : cfg_(std::move(cfg))
    {
        check_config(cfg_);
    }

    ChannelRealization RealizationStream::next()
    {
        if (done())
            throw std::out_of_range("RealizationStream exhausted.");
        return realization(cfg_, next_++);
    }

    RealizationStream realize(const ChannelConfig &cfg) { return RealizationStream(cfg); }

    std::vector<ChannelRealization> generate(const ChannelConfig &cfg, unsigned threads)
    {
        check_config(cfg);
        std::vector<ChannelRealization> out(cfg.realizations);
        parallel_for(cfg.realizations, threads, [&](std::size_t i) { out[i] = realization(cfg, i); });
        return out;
    }

    cplx effective_channel(const ChannelRealization &r, const RisPhaseProfile &profile)
    {
        if (r.h.size() != r.g.size() || r.h.size() != profile.size())
            throw std::invalid_argument("effective_channel: dimension mismatch.");
        cplx s = r.h_siso;
        for (std::size_t n = 0; n < r.h.size(); ++n)
            s += r.g[n] * profile.coefficient(n) * r.h[n];
        return s;
    }
}
