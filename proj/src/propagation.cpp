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

#include "simris/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simris
{
    namespace
    {
        constexpr double four_pi = 4.0 * pi;

        void require_positive(double v, const char *what)
        {
            if (!(v > 0.0))
                throw std::invalid_argument(std::string(what) + " must be positive.");
        }
    }

    double LinkBudgetParams::k() const { return 2.0 * pi / lambda; }

    LinkBudgetParams LinkBudgetParams::for_frequency(double frequency_ghz)
    {
        LinkBudgetParams p;
        p.lambda = wavelength(frequency_ghz);
        return p;
    }

    RcsParams RcsParams::from_area(double area, double lambda)
    {
        return {area, area, rcs_from_area(area, lambda)};
    }

    RcsParams RcsParams::from_gain(double ge, double lambda)
    {
        const double ae = ge * lambda * lambda / four_pi;
        return {ae, ae, rcs_from_gain(ge, lambda)};
    }

    double element_pattern_gain(double theta)
    {
        const double c = std::cos(theta);
        if (std::abs(theta) >= pi / 2.0 || c <= 0.0)
            return 0.0;
        return 2.0 * (2.0 * element_pattern_q + 1.0) * std::pow(c, 2.0 * element_pattern_q);
    }

    double element_gain(const LocalAngles &ang)
    {
        if (std::abs(ang.azimuth) > pi / 2.0)
            return 0.0;
        return element_pattern_gain(ang.elevation);
    }

    double captured_power_at_element(const LinkBudgetParams &p, double a_n, double ge_tx)
    {
        require_positive(a_n, "Tx-element distance");
        return p.pt * p.gt * ge_tx * p.lambda * p.lambda / (four_pi * four_pi * a_n * a_n);
    }

    double two_hop_received_power(const LinkBudgetParams &p, double a_n, double b_n, double ge_tx, double ge_rx)
    {
        require_positive(a_n, "Tx-element distance");
        require_positive(b_n, "element-Rx distance");
        const double l2 = p.lambda * p.lambda;
        const double f4 = four_pi * four_pi * four_pi * four_pi;
        return p.efficiency * p.pt * p.gt * p.gr * ge_tx * ge_rx * l2 * l2 / (f4 * a_n * a_n * b_n * b_n);
    }

    double radar_range_power(const LinkBudgetParams &p, double a_n, double b_n, double rcs)
    {
        require_positive(a_n, "Tx-scatterer distance");
        require_positive(b_n, "scatterer-Rx distance");
        if (rcs < 0.0)
            throw std::invalid_argument("Radar cross section cannot be negative.");
        const double f3 = four_pi * four_pi * four_pi;
        return p.efficiency * p.pt * p.gt * p.gr * p.lambda * p.lambda * rcs / (f3 * a_n * a_n * b_n * b_n);
    }

    double rcs_from_gain(double ge, double lambda) { return lambda * lambda * ge * ge / four_pi; }

    double rcs_from_area(double area, double lambda) { return four_pi * area * area / (lambda * lambda); }

    double cascaded_path_gain(double l1, double l2) { return l1 * l2; }

    double friis_attenuation(double lambda, double d)
    {
        require_positive(d, "Distance");
        const double r = lambda / (four_pi * d);
        return r * r;
    }

    PathLossModel default_path_loss_model(Environment env, double frequency_ghz)
    {
        // Measurement-based CI parameters (omnidirectional). The same exponents
        // are used at 73 GHz; the frequency enters through the 1 m free-space term.
        PathLossModel m;
        m.environment = env;
        m.frequency_ghz = frequency_ghz;
        if (env == Environment::InH)
        {
            m.los = {1.73, 3.02};
            m.nlos = {3.19, 8.29};
        }
        else
        {
            m.los = {2.0, 4.0};
            m.nlos = {3.2, 7.0};
        }
        return m;
    }

    double ci_path_loss_db(const PathLossModel &model, double d, bool los, double shadow_db)
    {
        if (!(d >= model.reference_distance))
            throw std::domain_error("CI path loss: distance below the reference distance.");
        const double lambda = wavelength(model.frequency_ghz);
        const double fspl = 20.0 * std::log10(four_pi * model.reference_distance / lambda);
        return fspl + 10.0 * model.state(los).exponent * std::log10(d / model.reference_distance) + shadow_db;
    }

    double ci_path_loss(const PathLossModel &model, double d, bool los, double shadow_db)
    {
        return std::pow(10.0, -ci_path_loss_db(model, d, los, shadow_db) / 10.0);
    }

    double sample_shadowing_db(Rng &rng, double sigma_db)
    {
        const double x = rng.normal() * sigma_db;
        return std::clamp(x, -3.0 * sigma_db, 3.0 * sigma_db);
    }

    double high_mount_threshold(Environment env)
    {
        return env == Environment::InH ? 2.0 : 10.0;
    }

    double los_probability(Environment env, double d, std::optional<double> ris_height)
    {
        if (!(d > 0.0))
            throw std::invalid_argument("LOS probability: distance must be positive.");

        if (ris_height && *ris_height >= high_mount_threshold(env))
            return 1.0;

        if (env == Environment::InH)
        {
            if (d <= 1.2)
                return 1.0;
            if (d <= 6.5)
                return std::exp(-(d - 1.2) / 4.7);
            return 0.32 * std::exp(-(d - 6.5) / 32.9);
        }
        const double e = std::exp(-d / 39.0);
        return std::min(20.0 / d, 1.0) * (1.0 - e) + e;
    }

    bool sample_los_indicator(Rng &rng, double p)
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("LOS indicator: probability outside [0, 1].");
        return rng.bernoulli(p);
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
}
