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

#ifndef SIMRIS_CLUSTERS_HPP
#define SIMRIS_CLUSTERS_HPP

#include "simris/geometry.hpp"
#include "simris/propagation.hpp"
#include "simris/random.hpp"

#include <string_view>
#include <vector>

namespace simris
{
    enum class LinkKind
    {
        TxRis,
        RisRx,
        TxRx
    };

    std::string_view to_string(LinkKind link);

    struct Subray
    {
        double azimuth_offset = 0.0;   // radians, relative to the cluster mean
        double elevation_offset = 0.0; // radians
        Point3 position;
        cplx beta;                 // CN(0, 1) path gain
        double attenuation = 0.0;  // linear, CI NLOS over the two-segment distance
        LocalAngles arrival;       // seen from the RIS; unused for the Tx-Rx link
    };

    struct Cluster
    {
        double azimuth = 0.0;   // global mean direction from the link origin
        double elevation = 0.0;
        double distance = 0.0;  // from the link origin
        Point3 center;
        double shadow_db = 0.0;
        std::vector<Subray> subrays;
    };

    struct ClusterSet
    {
        LinkKind link = LinkKind::TxRis;
        std::vector<Cluster> clusters;
        double gamma = 0.0; // sqrt(1 / sum_c S_c)

        std::size_t total_subrays() const;
        // Recomputes gamma from the subray counts.
        void normalize();
    };

    // Simulator defaults for the cluster statistics; all overridable.
    struct ClusterStatistics
    {
        double mean_clusters = 1.8;     // Poisson mean lambda_C
        unsigned max_subrays = 30;      // S_c ~ U{1..max}
        double azimuth_range_deg = 60.0;   // cluster mean azimuth ~ U(-a, a) about the link axis
        double elevation_range_deg = 20.0; // cluster mean elevation ~ U(-e, e)
        double subray_spread_deg = 5.0;    // rms of the Laplacian intra-cluster offsets
        unsigned placement_attempts = 16;

        static ClusterStatistics defaults(double frequency_ghz);

        friend bool operator==(const ClusterStatistics &, const ClusterStatistics &) = default;
    };

    double default_mean_clusters(double frequency_ghz);

    // max{Poisson(mean), 1}
    unsigned sample_cluster_count(Rng &rng, double mean_clusters);
    unsigned sample_cluster_count_for(Rng &rng, double frequency_ghz);

    unsigned sample_subray_count(Rng &rng, unsigned max_subrays = 30);

    cplx sample_complex_gain(Rng &rng);

    // Link end points: TxRis = (tx, ris), RisRx = (ris, rx), TxRx = (tx, rx).
    std::pair<Point3, Point3> link_endpoints(const Scenario &scn, LinkKind link);

    // Attenuation of a subray at `position` for the given link, from geometry only.
    double subray_attenuation(const Scenario &scn, LinkKind link, const PathLossModel &model,
                              const Point3 &position, double shadow_db);

    ClusterSet sample_cluster_geometry(Rng &rng, const Scenario &scn, LinkKind link,
                                       const ClusterStatistics &stats, const PathLossModel &model,
                                       bool shadowing = true);
}

#endif
