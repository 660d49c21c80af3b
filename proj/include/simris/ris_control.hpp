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

#ifndef SIMRIS_RIS_CONTROL_HPP
#define SIMRIS_RIS_CONTROL_HPP

#include "simris/channel.hpp"
#include "simris/phase_profile.hpp"
#include "simris/random.hpp"

namespace simris
{
    // Co-phases every cascaded term g_n h_n with the direct path (or with the
    // real axis when there is no direct path). Unit magnitudes.
    RisPhaseProfile optimal_phases(const ChannelRealization &r);

    RisPhaseProfile optimal_phases(const std::vector<cplx> &g, const std::vector<cplx> &h, cplx h_siso);

    // Phases i.i.d. U[0, 2 pi), unit magnitudes.
    RisPhaseProfile random_phases(Rng &rng, std::size_t n);

    // All magnitudes zero: the RIS contributes nothing.
    RisPhaseProfile off_profile(std::size_t n);

    // Snaps each phase to the nearest of 2^bits uniform levels k 2 pi / 2^bits.
    RisPhaseProfile quantize(const RisPhaseProfile &profile, unsigned bits);

    double wrap_phase(double phi); // into [0, 2 pi)
}

#endif
