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

#ifndef SIMRIS_GEOMETRY_HPP
#define SIMRIS_GEOMETRY_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simris
{
    using cplx = std::complex<double>;

    inline constexpr double pi = 3.14159265358979323846;
    inline constexpr double speed_of_light = 299792458.0; // m/s

    struct Point3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend bool operator==(const Point3 &, const Point3 &) = default;
    };

    inline Point3 operator+(const Point3 &a, const Point3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    inline Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    inline Point3 operator*(double s, const Point3 &a) { return {s * a.x, s * a.y, s * a.z}; }
    inline double dot(const Point3 &a, const Point3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    double norm(const Point3 &a);
    bool is_finite(const Point3 &a);

    enum class Environment
    {
        InH, // indoor hotspot, office
        UMi  // urban micro, street canyon
    };

    enum class WallPlacement
    {
        SideWall,    // RIS in the xz plane
        OppositeWall // RIS in the yz plane
    };

    std::string_view to_string(Environment env);
    std::string_view to_string(WallPlacement wall);
    std::optional<Environment> parse_environment(std::string_view text);
    std::optional<WallPlacement> parse_wall(std::string_view text);

    // Supported carrier frequencies in GHz.
    inline constexpr double supported_frequencies_ghz[] = {28.0, 73.0};
    bool is_supported_frequency(double frequency_ghz);

    double wavelength(double frequency_ghz);
    double wavenumber(double frequency_ghz);

    struct Scenario
    {
        Environment environment = Environment::InH;
        double frequency_ghz = 28.0;
        WallPlacement wall = WallPlacement::SideWall;
        Point3 tx;
        Point3 rx;
        Point3 ris;                           // reference point, element (0,0)
        std::size_t n_elements = 256;         // perfect square
        std::optional<double> element_spacing; // meters, defaults to lambda/2
        bool direct_link_present = true;

        double lambda() const { return wavelength(frequency_ghz); }
        double k() const { return wavenumber(frequency_ghz); }
        double spacing() const { return element_spacing.value_or(lambda() / 2.0); }
        // Elements per side of the square array; 0 if n_elements is not a perfect square.
        std::size_t side() const;

        friend bool operator==(const Scenario &, const Scenario &) = default;
    };

    // Angles in the RIS local frame. The frame is spanned by the first array
    // axis (global x for SideWall, global y for OppositeWall), the second array
    // axis (global z) and the broadside normal pointing into the room.
    struct LocalAngles
    {
        double azimuth = 0.0;   // (-pi, pi], measured from broadside towards the first array axis
        double elevation = 0.0; // [-pi/2, pi/2], measured from the horizontal towards +z
    };

    struct RisFrame
    {
        Point3 first_axis;
        Point3 second_axis;
        Point3 normal;
    };

    // The room (or street segment) occupied by the scenario. The RIS wall is
    // one face of the box.
    struct Bounds
    {
        Point3 lo;
        Point3 hi;
        bool contains(const Point3 &p, double tol = 1e-9) const;
        Point3 clamp(const Point3 &p) const;
    };

    double distance(const Point3 &a, const Point3 &b);

    RisFrame ris_frame(WallPlacement wall);

    // Throws std::invalid_argument if target coincides with the RIS.
    LocalAngles local_angles(const Point3 &ris, WallPlacement wall, const Point3 &target);

    // Unit direction in global coordinates for a pair of local angles.
    Point3 direction_from_local(WallPlacement wall, const LocalAngles &ang);

    // Global position of element (p, q); p runs along the first axis, q along the second.
    Point3 element_position(const Scenario &scn, std::size_t p, std::size_t q);

    // Element n maps to (p, q) = (n / side, n % side).
    Point3 element_position(const Scenario &scn, std::size_t n);

    // Planar-wave steering vector, entry n = exp(j k d (p cos(el) sin(az) + q sin(el))).
    std::vector<cplx> array_response(const Scenario &scn, const LocalAngles &ang);

    // Largest element separation; used for the far-field distance.
    double aperture(const Scenario &scn);

    Bounds environment_bounds(const Scenario &scn);

    // ---------- Validation ----------

    struct Violation
    {
        std::string code;
        std::string message;

        friend bool operator==(const Violation &, const Violation &) = default;
    };

    namespace violation
    {
        inline constexpr std::string_view nonfinite_coordinate = "NONFINITE_COORDINATE";
        inline constexpr std::string_view unsupported_frequency = "UNSUPPORTED_FREQUENCY";
        inline constexpr std::string_view elements_not_square = "ELEMENTS_NOT_SQUARE";
        inline constexpr std::string_view invalid_spacing = "INVALID_ELEMENT_SPACING";
        inline constexpr std::string_view cell_radius = "CELL_RADIUS_EXCEEDED";
        inline constexpr std::string_view negative_coordinate = "NEGATIVE_COORDINATE";
        inline constexpr std::string_view nonpositive_height = "NONPOSITIVE_HEIGHT";
        inline constexpr std::string_view tx_height_range = "TX_HEIGHT_RANGE";
        inline constexpr std::string_view rx_too_high = "RX_TOO_HIGH";
        inline constexpr std::string_view ris_too_high = "RIS_ABOVE_CEILING";
        inline constexpr std::string_view tx_not_on_yz_plane = "TX_NOT_ON_YZ_PLANE";
        inline constexpr std::string_view ris_not_on_wall = "RIS_NOT_ON_WALL";
        inline constexpr std::string_view coincident_positions = "COINCIDENT_POSITIONS";
    }

    // Empty result means the scenario is usable.
    std::vector<Violation> validate_scenario(const Scenario &scn);

    // Example placements that satisfy validate_scenario.
    Scenario recommend_positions(Environment env, WallPlacement wall);

    // Environment limits used by validation and cluster placement.
    struct EnvironmentLimits
    {
        double cell_radius;   // horizontal coordinates must stay below this
        double tx_min_height;
        double tx_max_height;
        double rx_max_height; // strict
        double ceiling;       // upper z bound for scatterers and the RIS
    };

    EnvironmentLimits environment_limits(Environment env);
}

#endif
