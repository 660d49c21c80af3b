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

#ifndef SIMRIS_PROPAGATION_HPP
#define SIMRIS_PROPAGATION_HPP

#include "simris/geometry.hpp"
#include "simris/random.hpp"

#include <optional>

namespace simris
{
    // Link-budget inputs of the deterministic RIS models. Powers in watts,
    // gains linear.
    struct LinkBudgetParams
    {
        double pt = 1.0;      // transmit power
        double gt = 1.0;      // Tx antenna gain
        double gr = 1.0;      // Rx antenna gain
        double ge_max = pi;   // broadside element gain (5 dBi)
        double efficiency = 1.0; // re-radiation efficiency, applied once per RIS reflection
        double lambda = wavelength(28.0);

        double k() const;
        static LinkBudgetParams for_frequency(double frequency_ghz);

        friend bool operator==(const LinkBudgetParams &, const LinkBudgetParams &) = default;
    };

    struct RcsParams
    {
        double area = 0.0;          // physical area A (m^2)
        double effective_area = 0.0; // A_e (m^2)
        double rcs = 0.0;           // sigma (m^2)

        static RcsParams from_area(double area, double lambda);
        static RcsParams from_gain(double ge, double lambda);
    };

    // Exponent of the cosine-power element pattern; chosen so that the
    // broadside gain 2(2q+1) equals pi.
    inline constexpr double element_pattern_q = 0.285;

    // Ge(theta) = 2(2q+1) cos^{2q}(theta); zero for |theta| >= pi/2.
    double element_pattern_gain(double theta);

    // Pattern evaluated for a local direction; zero behind the surface.
    double element_gain(const LocalAngles &ang);

    double captured_power_at_element(const LinkBudgetParams &p, double a_n, double ge_tx);

    double two_hop_received_power(const LinkBudgetParams &p, double a_n, double b_n, double ge_tx, double ge_rx);

    double radar_range_power(const LinkBudgetParams &p, double a_n, double b_n, double rcs);

    double rcs_from_gain(double ge, double lambda);
    double rcs_from_area(double area, double lambda);

    double cascaded_path_gain(double l1, double l2);

    // Free-space attenuation (lambda / (4 pi d))^2.
    double friis_attenuation(double lambda, double d);

    struct PathLossState
    {
        double exponent = 2.0; // n
        double sigma_db = 0.0; // shadow-fading standard deviation

        friend bool operator==(const PathLossState &, const PathLossState &) = default;
    };

    // Close-in free-space reference distance model.
    struct PathLossModel
    {
        Environment environment = Environment::InH;
        double frequency_ghz = 28.0;
        PathLossState los;
        PathLossState nlos;
        double reference_distance = 1.0; // d0

        const PathLossState &state(bool is_los) const { return is_los ? los : nlos; }

        friend bool operator==(const PathLossModel &, const PathLossModel &) = default;
    };

    PathLossModel default_path_loss_model(Environment env, double frequency_ghz);

    // Path loss in dB; throws std::domain_error for d < d0.
    double ci_path_loss_db(const PathLossModel &model, double d, bool los, double shadow_db);

    // Linear attenuation 10^(-PL/10).
    double ci_path_loss(const PathLossModel &model, double d, bool los, double shadow_db);

    // Log-normal shadowing in dB, clamped to +-3 sigma.
    double sample_shadowing_db(Rng &rng, double sigma_db);

    // RIS heights at or above which the RIS links are treated as LOS.
    double high_mount_threshold(Environment env);

    double los_probability(Environment env, double d, std::optional<double> ris_height = std::nullopt);

    bool sample_los_indicator(Rng &rng, double p);

    double db_to_linear(double db);
    double linear_to_db(double lin);
    double dbm_to_watts(double dbm);
    double watts_to_dbm(double w);
}

#endif
