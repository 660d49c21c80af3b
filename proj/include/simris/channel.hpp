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

#ifndef SIMRIS_CHANNEL_HPP
#define SIMRIS_CHANNEL_HPP

#include "simris/clusters.hpp"
#include "simris/geometry.hpp"
#include "simris/phase_profile.hpp"
#include "simris/propagation.hpp"
#include "simris/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace simris
{
    // How the per-element response to a point source is formed.
    //   Planar    far-field steering vector, amplitude from the reference element
    //   Spherical exact per-element phase; amplitude scaled by the per-element
    //             distance and element gain
    //   Auto      LOS terms and scatterers inside the Fraunhofer distance get
    //             exact phases, other scatterers the planar steering vector;
    //             per-element amplitudes only when the distance spread across
    //             the array reaches spherical_amplitude_threshold
    enum class Wavefront
    {
        Auto,
        Planar,
        Spherical
    };

    inline constexpr double spherical_amplitude_threshold = 1e-3;

    // Override for the Bernoulli LOS indicators of the gated links.
    enum class LosMode
    {
        Stochastic,
        AlwaysLos,
        NeverLos
    };

    std::string_view to_string(Wavefront w);
    std::optional<Wavefront> parse_wavefront(std::string_view text);
    std::string_view to_string(LosMode m);
    std::optional<LosMode> parse_los_mode(std::string_view text);

    struct ChannelConfig
    {
        Scenario scenario;
        LinkBudgetParams link;  // gt, gr and efficiency enter the channel; pt is applied by the metrics
        PathLossModel path_loss;
        ClusterStatistics cluster_stats;
        std::size_t realizations = 1;
        std::uint64_t seed = 0;
        Wavefront wavefront = Wavefront::Auto;
        LosMode los_mode = LosMode::Stochastic;
        bool scattering = true; // include cluster terms
        bool shadowing = true;
        std::optional<double> fixed_element_gain; // replaces the element pattern when set

        // Defaults (path loss, cluster statistics, wavelength) derived from the scenario.
        static ChannelConfig for_scenario(const Scenario &scn);

        friend bool operator==(const ChannelConfig &, const ChannelConfig &) = default;
    };

    class ScenarioError : public std::invalid_argument
    {
    public:
        ScenarioError(const std::string &what, std::vector<Violation> violations)
            : std::invalid_argument(what), violations_(std::move(violations)) {}
        const std::vector<Violation> &violations() const { return violations_; }

    private:
        std::vector<Violation> violations_;
    };

    // Throws ScenarioError on scenario violations and std::invalid_argument on
    // inconsistent settings.
    void check_config(const ChannelConfig &cfg);

    struct LosDraw
    {
        bool los = false;
        double probability = 0.0;
        double eta = 0.0;      // random LOS phase, U[0, 2 pi)
        double shadow_db = 0.0;
    };

    struct ChannelRealization
    {
        std::vector<cplx> h; // Tx -> RIS
        std::vector<cplx> g; // RIS -> Rx
        cplx h_siso;         // Tx -> Rx
        std::uint64_t seed = 0;
        std::size_t index = 0;
        LosDraw los_h;
        LosDraw los_g;
        LosDraw los_siso;
    };

    struct LinkSample
    {
        std::vector<cplx> v;
        ClusterSet clusters;
        LosDraw los;
    };

    struct SisoSample
    {
        cplx h;
        ClusterSet clusters; // empty for the indoor (shared-cluster) model
        LosDraw los;
    };

    // Substream of realization `index` for one link; the phase stream feeds
    // randomized RIS profiles.
    enum class Stream : std::uint64_t
    {
        TxRis = 1,
        RisRx = 2,
        TxRx = 3,
        Phases = 4,
    };
    Rng stream_rng(std::uint64_t seed, std::size_t index, Stream stream);

    double element_gain(const ChannelConfig &cfg, const LocalAngles &ang);

    // Adds coeff * sqrt(Ge L) * steering(source) to `out`.
    void accumulate_ray(std::span<cplx> out, const ChannelConfig &cfg, const Point3 &source, cplx coeff,
                        double attenuation, bool is_los);

    // gamma * sum beta sqrt(Ge L) steering over a Tx-RIS or RIS-Rx cluster set.
    std::vector<cplx> cluster_response(const ChannelConfig &cfg, const ClusterSet &clusters);

    // sqrt(Ge L) exp(j phase) steering(source)
    std::vector<cplx> los_response(const ChannelConfig &cfg, const Point3 &source, double attenuation, double phase);

    LinkSample gen_h(Rng &rng, const ChannelConfig &cfg);
    LinkSample gen_g_indoor(Rng &rng, const ChannelConfig &cfg);
    LinkSample gen_g_outdoor(Rng &rng, const ChannelConfig &cfg);
    SisoSample gen_hsiso_indoor(Rng &rng, const ChannelConfig &cfg, const ClusterSet &shared);
    SisoSample gen_hsiso_outdoor(Rng &rng, const ChannelConfig &cfg);

    // Realization `index`, independent of any other index. Does not validate.
    ChannelRealization realization(const ChannelConfig &cfg, std::size_t index);

    // Lazy, validated sequence of realizations 0..R-1.
    class RealizationStream
    {
    public:
        explicit RealizationStream(ChannelConfig cfg);

        bool done() const { return next_ >= cfg_.realizations; }
        std::size_t size() const { return cfg_.realizations; }
        std::size_t position() const { return next_; }
        ChannelRealization next();
        const ChannelConfig &config() const { return cfg_; }

    private:
        ChannelConfig cfg_;
        std::size_t next_ = 0;
    };

    RealizationStream realize(const ChannelConfig &cfg);

    // All realizations, generated on `threads` workers (0 = hardware concurrency).
    std::vector<ChannelRealization> generate(const ChannelConfig &cfg, unsigned threads = 0);

    // g^T Theta h + h_SISO
    cplx effective_channel(const ChannelRealization &r, const RisPhaseProfile &profile);
}

#endif
