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

#include "simris/baseline.hpp"

#include <cmath>
#include <stdexcept>

namespace simris
{
    namespace
    {
        constexpr double four_pi = 4.0 * pi;

        void check_profile(const Scenario &scn, const RisPhaseProfile &profile)
        {
            if (profile.size() != scn.n_elements)
                throw std::invalid_argument("Phase profile length does not match the number of RIS elements.");
        }

        void check_ios(const IoSet &ios)
        {
            if (ios.positions.empty())
                throw std::invalid_argument("IoSet must contain at least one IO.");
            if (ios.positions.size() != ios.rcs.size())
                throw std::invalid_argument("IoSet positions and RCS lengths differ.");
            for (double s : ios.rcs)
                if (!(s >= 0.0))
                    throw std::invalid_argument("IO radar cross sections must be non-negative.");
        }

        double checked_distance(const Point3 &a, const Point3 &b)
        {
            const double d = distance(a, b);
            if (!(d > 0.0))
                throw std::invalid_argument("Degenerate geometry: zero link distance.");
            return d;
        }
    }

    IoSet IoSet::isotropic(std::vector<Point3> positions, double lambda)
    {
        IoSet s;
        s.rcs.assign(positions.size(), rcs_from_gain(1.0, lambda));
        s.positions = std::move(positions);
        return s;
    }

    cplx los_effective_gain(const Scenario &scn, const LinkBudgetParams &p, const RisPhaseProfile &profile)
    {
        check_profile(scn, profile);
        const double k = p.k();

        cplx sum = 0.0;
        for (std::size_t n = 0; n < scn.n_elements; ++n)
        {
            const Point3 e = element_position(scn, n);
            const double a_n = checked_distance(scn.tx, e);
            const double b_n = checked_distance(e, scn.rx);
            const double prx = two_hop_received_power(p, a_n, b_n, p.ge_max, p.ge_max);
            sum += std::sqrt(prx) * profile.coefficient(n) * std::polar(1.0, -k * (a_n + b_n));
        }

        if (scn.direct_link_present)
        {
            const double d = checked_distance(scn.tx, scn.rx);
            const double p_tr = p.pt * p.gt * p.gr * friis_attenuation(p.lambda, d);
            sum += std::sqrt(p_tr) * std::polar(1.0, -k * d);
        }
        return sum;
    }

    CascadeChannel los_channel(const Scenario &scn, const LinkBudgetParams &p)
    {
        const double k = p.k();
        CascadeChannel out;
        out.h.resize(scn.n_elements);
        out.g.resize(scn.n_elements);
        for (std::size_t n = 0; n < scn.n_elements; ++n)
        {
            const Point3 e = element_position(scn, n);
            const double a_n = checked_distance(scn.tx, e);
            const double b_n = checked_distance(e, scn.rx);
            const double l1 = p.efficiency * p.gt * p.ge_max * friis_attenuation(p.lambda, a_n);
            const double l2 = p.gr * p.ge_max * friis_attenuation(p.lambda, b_n);
            out.h[n] = std::sqrt(l1) * std::polar(1.0, -k * a_n);
            out.g[n] = std::sqrt(l2) * std::polar(1.0, -k * b_n);
        }
        return out;
    }

    double io_cascade_power(const LinkBudgetParams &p, double a_m, double b_mn, double c_n, double rcs)
    {
        if (!(a_m > 0.0 && b_mn > 0.0 && c_n > 0.0))
            throw std::invalid_argument("IO cascade: distances must be positive.");
        const double l2 = p.lambda * p.lambda;
        const double f5 = std::pow(four_pi, 5);
        return p.efficiency * p.pt * p.gt * p.gr * p.ge_max * p.ge_max * l2 * l2 * rcs /
               (f5 * a_m * a_m * b_mn * b_mn * c_n * c_n);
    }

    CascadeChannel multi_io_channel(const Scenario &scn, const IoSet &ios, const LinkBudgetParams &p)
    {
        check_ios(ios);
        const double k = p.k();
        const double f3 = four_pi * four_pi * four_pi;

        std::vector<double> a(ios.size());
        for (std::size_t m = 0; m < ios.size(); ++m)
            a[m] = checked_distance(scn.tx, ios.positions[m]);

        CascadeChannel out;
        out.h.assign(scn.n_elements, cplx{0.0});
        out.g.resize(scn.n_elements);
        for (std::size_t n = 0; n < scn.n_elements; ++n)
        {
            const Point3 e = element_position(scn, n);
            const double c_n = checked_distance(e, scn.rx);
            const double l_los = p.gr * p.ge_max * friis_attenuation(p.lambda, c_n);
            out.g[n] = std::sqrt(l_los) * std::polar(1.0, -k * c_n);

            for (std::size_t m = 0; m < ios.size(); ++m)
            {
                const double b_mn = checked_distance(ios.positions[m], e);
                const double l_ris = p.efficiency * p.gt * p.ge_max * p.lambda * p.lambda * ios.rcs[m] /
                                     (f3 * a[m] * a[m] * b_mn * b_mn);
                out.h[n] += std::sqrt(l_ris) * std::polar(1.0, -k * (a[m] + b_mn));
            }
        }
        return out;
    }

    cplx io_received_signal(const Scenario &scn, const IoSet &ios, const LinkBudgetParams &p,
                            const RisPhaseProfile &profile)
    {
        check_ios(ios);
        check_profile(scn, profile);
        const double k = p.k();

        cplx y = 0.0;
        for (std::size_t n = 0; n < scn.n_elements; ++n)
        {
            const Point3 e = element_position(scn, n);
            const double c_n = checked_distance(e, scn.rx);
            cplx inner = 0.0;
            for (std::size_t m = 0; m < ios.size(); ++m)
            {
                const double a_m = checked_distance(scn.tx, ios.positions[m]);
                const double b_mn = checked_distance(ios.positions[m], e);
                const double prx = io_cascade_power(p, a_m, b_mn, c_n, ios.rcs[m]) / p.pt;
                inner += std::sqrt(prx) * std::polar(1.0, -k * (a_m + b_mn + c_n));
            }
            y += profile.coefficient(n) * inner;
        }
        return y;
    }

    cplx cascade_gain(const std::vector<cplx> &g, const RisPhaseProfile &profile, const std::vector<cplx> &h)
    {
        if (g.size() != h.size() || g.size() != profile.size())
            throw std::invalid_argument("cascade_gain: dimension mismatch.");
        cplx s = 0.0;
        for (std::size_t n = 0; n < g.size(); ++n)
            s += g[n] * profile.coefficient(n) * h[n];
        return s;
    }
}
