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

#ifndef SIMRIS_TESTS_SUPPORT_HPP
#define SIMRIS_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles for the test binaries.

#include "simris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace simris::test
{
    // Indoor side-wall layout with the RIS at height z_ris.
    inline Scenario indoor_side(double z_ris = 2.0, std::size_t n = 256)
    {
        Scenario s;
        s.environment = Environment::InH;
        s.wall = WallPlacement::SideWall;
        s.tx = {0.0, 25.0, 2.0};
        s.rx = {38.0, 48.0, 1.0};
        s.ris = {40.0, 50.0, z_ris};
        s.n_elements = n;
        return s;
    }

    inline Scenario indoor_opposite(double z_ris = 2.0, std::size_t n = 256)
    {
        Scenario s = indoor_side(z_ris, n);
        s.wall = WallPlacement::OppositeWall;
        s.rx = {70.0, 35.0, 1.0};
        s.ris = {70.0, 30.0, z_ris};
        return s;
    }

    // Street-canyon layout; the Rx sits inside the swept region.
    inline Scenario outdoor_side(std::size_t n = 256, bool direct = true)
    {
        Scenario s;
        s.environment = Environment::UMi;
        s.wall = WallPlacement::SideWall;
        s.tx = {0.0, 25.0, 20.0};
        s.rx = {50.0, 70.0, 1.0};
        s.ris = {70.0, 85.0, 10.0};
        s.n_elements = n;
        s.direct_link_present = direct;
        return s;
    }

    inline ChannelConfig config_for(const Scenario &s, std::size_t realizations, std::uint64_t seed)
    {
        ChannelConfig c = ChannelConfig::for_scenario(s);
        c.realizations = realizations;
        c.seed = seed;
        return c;
    }

    // Close-in path loss written out from its textbook form.
    inline double ci_oracle(double frequency_ghz, double exponent, double d, double shadow_db)
    {
        const double lambda = 299792458.0 / (frequency_ghz * 1e9);
        const double pl = 20.0 * std::log10(4.0 * pi / lambda) + 10.0 * exponent * std::log10(std::max(d, 1.0)) +
                          shadow_db;
        return std::pow(10.0, -pl / 10.0);
    }

    inline double friis_oracle(double lambda, double d)
    {
        const double r = lambda / (4.0 * pi * d);
        return r * r;
    }

    // Kolmogorov-Smirnov p-value of the sample against U[lo, hi).
    inline double ks_uniform_pvalue(std::vector<double> x, double lo, double hi)
    {
        std::sort(x.begin(), x.end());
        const double n = static_cast<double>(x.size());
        double d = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            const double f = (x[i] - lo) / (hi - lo);
            d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
        }
        const double sn = std::sqrt(n);
        const double lam = (sn + 0.12 + 0.11 / sn) * d;
        if (lam < 0.2)
            return 1.0;
        double q = 0.0;
        for (int k = 1; k <= 100; ++k)
            q += 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lam * lam);
        return std::clamp(q, 0.0, 1.0);
    }

    inline double max_abs_diff(const std::vector<cplx> &a, const std::vector<cplx> &b)
    {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    }

    inline double max_abs(const std::vector<cplx> &a)
    {
        double m = 0.0;
        for (const auto &v : a)
            m = std::max(m, std::abs(v));
        return m;
    }
}

#endif
