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

#ifndef SIMRIS_PHASE_PROFILE_HPP
#define SIMRIS_PHASE_PROFILE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace simris
{
    // Diagonal of the RIS response matrix: entry n is magnitude[n] * exp(j phase[n]).
    struct RisPhaseProfile
    {
        std::vector<double> magnitude; // in [0, 1]
        std::vector<double> phase;     // radians

        RisPhaseProfile() = default;
        explicit RisPhaseProfile(std::size_t n) : magnitude(n, 1.0), phase(n, 0.0) {}
        RisPhaseProfile(std::vector<double> mag, std::vector<double> ph) : magnitude(std::move(mag)), phase(std::move(ph))
        {
            if (magnitude.size() != phase.size())
                throw std::invalid_argument("RisPhaseProfile: magnitude and phase lengths differ.");
            for (double a : magnitude)
                if (!(a >= 0.0 && a <= 1.0))
                    throw std::invalid_argument("RisPhaseProfile: magnitude outside [0, 1].");
        }

        std::size_t size() const { return phase.size(); }
        std::complex<double> coefficient(std::size_t n) const { return std::polar(magnitude[n], phase[n]); }
    };
}

#endif
