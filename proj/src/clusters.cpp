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

#include "simris/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simris
{
    namespace
    {
        constexpr double deg = pi / 180.0;

        // Minimum scatterer clearance from the RIS reference point (m).
        constexpr double min_ris_clearance = 0.05;

        Point3 global_direction(double azimuth, double elevation)
        {
            const double ce = std::cos(elevation);
            return {ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation)};
        }

        Point3 keep_clear_of_ris(const Scenario &scn, Point3 p)
        {
            if (distance(p, scn.ris) < min_ris_clearance)
                p = scn.ris + min_ris_clearance * ris_frame(scn.wall).normal;
            return p;
        }
    }

    std::string_view to_string(LinkKind link)
    {
        switch (link)
        {
        case LinkKind::TxRis:
            return "tx-ris";
        case LinkKind::RisRx:
            return "ris-rx";
        default:
            return "tx-rx";
        }
    }

    std::size_t ClusterSet::total_subrays() const
    {
        std::size_t m = 0;
        for (const auto &c : clusters)
            m += c.subrays.size();
        return m;
    }

    void ClusterSet::normalize()
    {
        const std::size_t m = total_subrays();
        gamma = m == 0 ? 0.0 : std::sqrt(1.0 / static_cast<double>(m));
    }

    double default_mean_clusters(double frequency_ghz)
    {
        return frequency_ghz >= 73.0 ? 1.9 : 1.8;
    }

    ClusterStatistics ClusterStatistics::defaults(double frequency_ghz)
    {
        ClusterStatistics s;
        s.mean_clusters = default_mean_clusters(frequency_ghz);
        return s;
    }

    unsigned sample_cluster_count(Rng &rng, double mean_clusters)
    {
        return std::max(rng.poisson(mean_clusters), 1u);
    }

    unsigned sample_cluster_count_for(Rng &rng, double frequency_ghz)
    {
        return sample_cluster_count(rng, default_mean_clusters(frequency_ghz));
    }

    unsigned sample_subray_count(Rng &rng, unsigned max_subrays)
    {
        if (max_subrays == 0)
            throw std::invalid_argument("Maximum number of sub-rays must be at least 1.");
        return static_cast<unsigned>(rng.uniform_int(1, max_subrays));
    }

    cplx sample_complex_gain(Rng &rng) { return rng.complex_gaussian(); }

    std::pair<Point3, Point3> link_endpoints(const Scenario &scn, LinkKind link)
    {
        switch (link)
        {
        case LinkKind::TxRis:
            return {scn.tx, scn.ris};
        case LinkKind::RisRx:
            return {scn.ris, scn.rx};
        default:
            return {scn.tx, scn.rx};
        }
    }

    double subray_attenuation(const Scenario &scn, LinkKind link, const PathLossModel &model,
                              const Point3 &position, double shadow_db)
    {
        const auto [from, to] = link_endpoints(scn, link);
        const double travel = distance(from, position) + distance(position, to);
        return ci_path_loss(model, std::max(travel, model.reference_distance), false, shadow_db);
    }

    ClusterSet sample_cluster_geometry(Rng &rng, const Scenario &scn, LinkKind link,
                                       const ClusterStatistics &stats, const PathLossModel &model,
                                       bool shadowing)
    {
        const Bounds bounds = environment_bounds(scn);
        const auto [origin, target] = link_endpoints(scn, link);
        const Point3 axis = target - origin;
        const double link_distance = norm(axis);
        if (!(link_distance > 0.0))
            throw std::invalid_argument("Cluster sampling: link end points coincide.");

        const double axis_az = std::atan2(axis.y, axis.x);
        const double axis_el = std::asin(std::clamp(axis.z / link_distance, -1.0, 1.0));
        const double min_dist = std::min(1.0, link_distance);
        const double laplace_scale = stats.subray_spread_deg * deg / std::sqrt(2.0);
        const double el_limit = pi / 2.0;

        ClusterSet set;
        set.link = link;
        const unsigned n_clusters = sample_cluster_count(rng, stats.mean_clusters);
        set.clusters.reserve(n_clusters);

        for (unsigned c = 0; c < n_clusters; ++c)
        {
            Cluster cl;
            const unsigned attempts = std::max(stats.placement_attempts, 1u);
            for (unsigned attempt = 0; attempt < attempts; ++attempt)
            {
                cl.azimuth = axis_az + rng.uniform(-stats.azimuth_range_deg, stats.azimuth_range_deg) * deg;
                cl.elevation = std::clamp(
                    axis_el + rng.uniform(-stats.elevation_range_deg, stats.elevation_range_deg) * deg,
                    -el_limit, el_limit);
                cl.distance = rng.uniform(min_dist, link_distance);
                cl.center = origin + cl.distance * global_direction(cl.azimuth, cl.elevation);
                if (bounds.contains(cl.center))
                    break;
            }
            cl.center = keep_clear_of_ris(scn, bounds.clamp(cl.center));

            const unsigned n_sub = sample_subray_count(rng, stats.max_subrays);
            cl.shadow_db = shadowing ? sample_shadowing_db(rng, model.nlos.sigma_db) : 0.0;
            if (!shadowing)
                rng.normal(); // keep the stream aligned with the shadowed case

            cl.subrays.resize(n_sub);
            for (auto &s : cl.subrays)
            {
                s.azimuth_offset = rng.laplace(laplace_scale);
                s.elevation_offset = rng.laplace(laplace_scale);
                const double el = std::clamp(cl.elevation + s.elevation_offset, -el_limit, el_limit);
                s.position = origin + cl.distance * global_direction(cl.azimuth + s.azimuth_offset, el);
                s.position = keep_clear_of_ris(scn, bounds.clamp(s.position));
                s.beta = sample_complex_gain(rng);
                s.attenuation = subray_attenuation(scn, link, model, s.position, cl.shadow_db);
                if (link != LinkKind::TxRx)
                    s.arrival = local_angles(scn.ris, scn.wall, s.position);
            }
            set.clusters.push_back(std::move(cl));
        }
        set.normalize();
        return set;
    }
}
