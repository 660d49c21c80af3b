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

#ifndef SIMRIS_BASELINE_HPP
#define SIMRIS_BASELINE_HPP

// Deterministic RIS signal models: pure-LOS links and Tx-side interacting
// objects (IOs) with per-element distances taken from the exact element
// coordinates. Channel vectors exclude the transmit power.

#include "simris/geometry.hpp"
#include "simris/phase_profile.hpp"
#include "simris/propagation.hpp"

#include <vector>

namespace simris
{
    struct IoSet
    {
        std::vector<Point3> positions;
        std::vector<double> rcs; // m^2, one per position

        std::size_t size() const { return positions.size(); }

        // Every IO is an isotropic scatterer, sigma = lambda^2 / (4 pi).
        static IoSet isotropic(std::vector<Point3> positions, double lambda);
    };

    struct CascadeChannel
    {
        std::vector<cplx> h; // Tx -> RIS
        std::vector<cplx> g; // RIS -> Rx
    };

    // Noise-free gain of the pure-LOS RIS link (plus the direct LOS path when
    // the scenario has one). Includes the transmit power.
    cplx los_effective_gain(const Scenario &scn, const LinkBudgetParams &p, const RisPhaseProfile &profile);

    // Per-element LOS vectors with h_n g_n = sqrt(P_n^Rx / Pt) exp(-jk(a_n + b_n)).
    CascadeChannel los_channel(const Scenario &scn, const LinkBudgetParams &p);

    // Received power over Tx -> IO m -> element n -> Rx.
    double io_cascade_power(const LinkBudgetParams &p, double a_m, double b_mn, double c_n, double rcs);

    CascadeChannel multi_io_channel(const Scenario &scn, const IoSet &ios, const LinkBudgetParams &p);

    // Double sum over elements and IOs, normalised by Pt. Reference for the
    // vector form g^T Theta h.
    cplx io_received_signal(const Scenario &scn, const IoSet &ios, const LinkBudgetParams &p,
                            const RisPhaseProfile &profile);

    // g^T Theta h
    cplx cascade_gain(const std::vector<cplx> &g, const RisPhaseProfile &profile, const std::vector<cplx> &h);

    inline cplx effective_siso(cplx h_direct) { return h_direct; }
}

#endif
