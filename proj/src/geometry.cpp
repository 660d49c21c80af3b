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

#include "simris/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace simris
{
    double norm(const Point3 &a) { return std::sqrt(dot(a, a)); }

    bool is_finite(const Point3 &a)
    {
        return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
    }

    std::string_view to_string(Environment env)
    {
        return env == Environment::InH ? "inh" : "umi";
    }

    std::string_view to_string(WallPlacement wall)
    {
        return wall == WallPlacement::SideWall ? "side" : "opposite";
    }

    std::optional<Environment> parse_environment(std::string_view text)
    {
        if (text == "inh" || text == "InH" || text == "INH")
            return Environment::InH;
        if (text == "umi" || text == "UMi" || text == "UMI")
            return Environment::UMi;
        return std::nullopt;
    }

    std::optional<WallPlacement> parse_wall(std::string_view text)
    {
        if (text == "side")
            return WallPlacement::SideWall;
        if (text == "opposite")
            return WallPlacement::OppositeWall;
        return std::nullopt;
    }

    bool is_supported_frequency(double frequency_ghz)
    {
        return std::any_of(std::begin(supported_frequencies_ghz), std::end(supported_frequencies_ghz),
                           [&](double f) { return f == frequency_ghz; });
    }

    double wavelength(double frequency_ghz) { return speed_of_light / (frequency_ghz * 1e9); }

    double wavenumber(double frequency_ghz) { return 2.0 * pi / wavelength(frequency_ghz); }

    std::size_t Scenario::side() const
    {
        if (n_elements == 0)
            return 0;
        auto s = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n_elements))));
        return s * s == n_elements ? s : 0;
    }

    bool Bounds::contains(const Point3 &p, double tol) const
    {
        return p.x >= lo.x - tol && p.x <= hi.x + tol &&
               p.y >= lo.y - tol && p.y <= hi.y + tol &&
               p.z >= lo.z - tol && p.z <= hi.z + tol;
    }

    Point3 Bounds::clamp(const Point3 &p) const
    {
        return {std::clamp(p.x, lo.x, hi.x), std::clamp(p.y, lo.y, hi.y), std::clamp(p.z, lo.z, hi.z)};
    }

    double distance(const Point3 &a, const Point3 &b) { return norm(a - b); }

    RisFrame ris_frame(WallPlacement wall)
    {
        if (wall == WallPlacement::SideWall)
            return {{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, -1.0, 0.0}};
        return {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {-1.0, 0.0, 0.0}};
    }

    LocalAngles local_angles(const Point3 &ris, WallPlacement wall, const Point3 &target)
    {
        const Point3 d = target - ris;
        const double r = norm(d);
        if (!(r > 0.0))
            throw std::invalid_argument("local_angles: target coincides with the RIS.");

        const RisFrame f = ris_frame(wall);
        const double u = dot(d, f.first_axis) / r;
        const double v = std::clamp(dot(d, f.second_axis) / r, -1.0, 1.0);
        const double w = dot(d, f.normal) / r;

        LocalAngles out;
        out.elevation = std::asin(v);
        // Exactly vertical directions have no defined azimuth; report broadside.
        out.azimuth = (u == 0.0 && w == 0.0) ? 0.0 : std::atan2(u, w);
        if (out.azimuth == -pi)
            out.azimuth = pi;
        return out;
    }

    Point3 direction_from_local(WallPlacement wall, const LocalAngles &ang)
    {
        const RisFrame f = ris_frame(wall);
        const double ce = std::cos(ang.elevation);
        return (ce * std::sin(ang.azimuth)) * f.first_axis +
               std::sin(ang.elevation) * f.second_axis +
               (ce * std::cos(ang.azimuth)) * f.normal;
    }

    Point3 element_position(const Scenario &scn, std::size_t p, std::size_t q)
    {
        const RisFrame f = ris_frame(scn.wall);
        const double d = scn.spacing();
        return scn.ris + (static_cast<double>(p) * d) * f.first_axis + (static_cast<double>(q) * d) * f.second_axis;
    }

    Point3 element_position(const Scenario &scn, std::size_t n)
    {
        const std::size_t side = scn.side();
        if (side == 0)
            throw std::invalid_argument("Number of RIS elements must be a nonzero perfect square.");
        return element_position(scn, n / side, n % side);
    }

    std::vector<cplx> array_response(const Scenario &scn, const LocalAngles &ang)
    {
        const std::size_t side = scn.side();
        if (side == 0)
            throw std::invalid_argument("Number of RIS elements must be a nonzero perfect square.");

        const double kd = scn.k() * scn.spacing();
        const double step_p = kd * std::cos(ang.elevation) * std::sin(ang.azimuth);
        const double step_q = kd * std::sin(ang.elevation);

        std::vector<cplx> a(side * side);
        for (std::size_t p = 0; p < side; ++p)
            for (std::size_t q = 0; q < side; ++q)
                a[p * side + q] = std::polar(1.0, static_cast<double>(p) * step_p + static_cast<double>(q) * step_q);
        return a;
    }

    double aperture(const Scenario &scn)
    {
        const std::size_t side = scn.side();
        if (side <= 1)
            return 0.0;
        return static_cast<double>(side - 1) * scn.spacing() * std::sqrt(2.0);
    }

    EnvironmentLimits environment_limits(Environment env)
    {
        if (env == Environment::InH)
            return {75.0, 2.0, 3.0, 2.0, 3.5};
        return {100.0, 3.0, 20.0, 2.0, 30.0};
    }

    Bounds environment_bounds(const Scenario &scn)
    {
        const EnvironmentLimits lim = environment_limits(scn.environment);
        Bounds b;
        b.lo = {0.0, 0.0, 0.0};
        if (scn.wall == WallPlacement::SideWall)
            b.hi = {lim.cell_radius, scn.ris.y, lim.ceiling};
        else
            b.hi = {scn.ris.x, lim.cell_radius, lim.ceiling};
        return b;
    }

    // ---------- Validation ----------

    namespace
    {
        void add(std::vector<Violation> &out, std::string_view code, std::string message)
        {
            out.push_back({std::string(code), std::move(message)});
        }

        std::string fmt_num(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", v);
            return buf;
        }
    }

    std::vector<Violation> validate_scenario(const Scenario &scn)
    {
        std::vector<Violation> out;

        const struct
        {
            const char *name;
            const Point3 *p;
        } entities[] = {{"Tx", &scn.tx}, {"Rx", &scn.rx}, {"RIS", &scn.ris}};

        bool finite = true;
        for (const auto &e : entities)
            if (!is_finite(*e.p))
            {
                add(out, violation::nonfinite_coordinate, std::string(e.name) + " position is not finite.");
                finite = false;
            }

        if (!is_supported_frequency(scn.frequency_ghz))
            add(out, violation::unsupported_frequency,
                "Frequency " + fmt_num(scn.frequency_ghz) + " GHz is not supported (use 28 or 73).");

        if (scn.side() == 0)
            add(out, violation::elements_not_square,
                "Number of RIS elements (" + std::to_string(scn.n_elements) + ") must be a nonzero perfect square.");

        if (scn.element_spacing && !(std::isfinite(*scn.element_spacing) && *scn.element_spacing > 0.0))
            add(out, violation::invalid_spacing, "Element spacing must be positive.");

        if (!finite)
            return out;

        const EnvironmentLimits lim = environment_limits(scn.environment);
        const std::string env_name = scn.environment == Environment::InH ? "InH Indoor Office" : "UMi Street Canyon";

        for (const auto &e : entities)
        {
            if (e.p->x < 0.0 || e.p->y < 0.0)
                add(out, violation::negative_coordinate,
                    std::string(e.name) + " horizontal coordinates must be non-negative.");
            if (e.p->x >= lim.cell_radius || e.p->y >= lim.cell_radius)
                add(out, violation::cell_radius,
                    std::string(e.name) + " lies outside the " + fmt_num(lim.cell_radius) + " m cell of " + env_name + ".");
            if (e.p->z <= 0.0)
                add(out, violation::nonpositive_height, std::string(e.name) + " height must be positive.");
        }

        if (scn.tx.z < lim.tx_min_height || scn.tx.z > lim.tx_max_height)
            add(out, violation::tx_height_range,
                "Tx height must be within " + fmt_num(lim.tx_min_height) + "-" + fmt_num(lim.tx_max_height) +
                    " m in " + env_name + ".");

        if (scn.rx.z >= lim.rx_max_height)
            add(out, violation::rx_too_high, "Rx is a ground user; its height must be less than " +
                                                 fmt_num(lim.rx_max_height) + " m.");

        if (scn.ris.z > lim.ceiling)
            add(out, violation::ris_too_high, "RIS height exceeds the " + fmt_num(lim.ceiling) + " m limit of " +
                                                  env_name + ".");

        if (std::abs(scn.tx.x) > 1e-9)
            add(out, violation::tx_not_on_yz_plane, "Tx must lie on the yz plane (x = 0).");

        if (scn.wall == WallPlacement::SideWall)
        {
            if (scn.ris.y <= 0.0 || scn.tx.y > scn.ris.y || scn.rx.y > scn.ris.y)
                add(out, violation::ris_not_on_wall,
                    "Side-wall RIS must bound the room: Tx and Rx need y <= y_RIS.");
        }
        else
        {
            if (scn.ris.x <= 0.0 || scn.tx.x > scn.ris.x || scn.rx.x > scn.ris.x)
                add(out, violation::ris_not_on_wall,
                    "Opposite-wall RIS must bound the room: Tx and Rx need x <= x_RIS.");
        }

        constexpr double min_separation = 0.01;
        if (distance(scn.tx, scn.rx) < min_separation || distance(scn.tx, scn.ris) < min_separation ||
            distance(scn.rx, scn.ris) < min_separation)
            add(out, violation::coincident_positions, "Tx, Rx and RIS must be at distinct positions.");

        return out;
    }

    Scenario recommend_positions(Environment env, WallPlacement wall)
    {
        Scenario s;
        s.environment = env;
        s.wall = wall;
        s.frequency_ghz = 28.0;
        s.n_elements = 256;
        s.direct_link_present = true;

        if (env == Environment::InH && wall == WallPlacement::SideWall)
        {
            s.tx = {0.0, 25.0, 2.0};
            s.rx = {38.0, 48.0, 1.0};
            s.ris = {40.0, 50.0, 2.0};
        }
        else if (env == Environment::InH)
        {
            s.tx = {0.0, 25.0, 2.0};
            s.rx = {70.0, 35.0, 1.0};
            s.ris = {70.0, 30.0, 2.0};
        }
        else if (wall == WallPlacement::SideWall)
        {
            s.tx = {0.0, 25.0, 20.0};
            s.rx = {50.0, 70.0, 1.0};
            s.ris = {70.0, 85.0, 10.0};
        }
        else
        {
            s.tx = {0.0, 25.0, 20.0};
            s.rx = {75.0, 50.0, 1.0};
            s.ris = {90.0, 45.0, 10.0};
        }
        return s;
    }
}
