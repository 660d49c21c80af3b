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

#include "simris/ris_control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simris
{
    namespace
    {
        constexpr double two_pi = 2.0 * pi;
    }

    double wrap_phase(double phi)
    {
        double r = std::fmod(phi, two_pi);
        if (r < 0.0)
            r += two_pi;
        if (r >= two_pi)
            r = 0.0;
        return r;
    }

    RisPhaseProfile optimal_phases(const std::vector<cplx> &g, const std::vector<cplx> &h, cplx h_siso)
    {
        if (g.size() != h.size())
            throw std::invalid_argument("optimal_phases: g and h lengths differ.");
        const double target = h_siso == cplx{0.0} ? 0.0 : std::arg(h_siso);
        RisPhaseProfile out(g.size());
        for (std::size_t n = 0; n < g.size(); ++n)
            out.phase[n] = wrap_phase(target - std::arg(g[n] * h[n]));
        return out;
    }

    RisPhaseProfile optimal_phases(const ChannelRealization &r) { return optimal_phases(r.g, r.h, r.h_siso); }

    RisPhaseProfile random_phases(Rng &rng, std::size_t n)
    {
        RisPhaseProfile out(n);
        for (auto &phi : out.phase)
            phi = rng.uniform(0.0, two_pi);
        return out;
    }

    RisPhaseProfile off_profile(std::size_t n)
    {
        RisPhaseProfile out(n);
        std::fill(out.magnitude.begin(), out.magnitude.end(), 0.0);
        return out;
    }

    RisPhaseProfile quantize(const RisPhaseProfile &profile, unsigned bits)
    {
        if (bits == 0 || bits > 52)
            throw std::invalid_argument("quantize: bits must be in [1, 52].");
        const double levels = std::ldexp(1.0, static_cast<int>(bits));
        const double step = two_pi / levels;
        RisPhaseProfile out = profile;
        for (auto &phi : out.phase)
        {
            double idx = std::nearbyint(wrap_phase(phi) / step);
            if (idx >= levels)
                idx = 0.0;
            phi = idx * step;
        }
        return out;
    }
}
