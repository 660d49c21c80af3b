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

#include "simris/random.hpp"

#include <cmath>
#include <stdexcept>

namespace simris
{
    namespace
    {
        constexpr double two_pi = 6.283185307179586476925286766559;

        std::uint64_t splitmix(std::uint64_t z)
        {
            z += 0x9E3779B97F4A7C15ULL;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        }
    }

    double Rng::uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi)
    {
        if (hi < lo)
            throw std::invalid_argument("uniform_int: empty range.");
        const std::uint64_t span = hi - lo;
        if (span == ~std::uint64_t{0})
            return engine_();
        const std::uint64_t n = span + 1;
        const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
        std::uint64_t r;
        do
            r = engine_();
        while (r >= limit);
        return lo + r % n;
    }

    double Rng::normal()
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    unsigned Rng::poisson(double mean)
    {
        if (!(mean >= 0.0))
            throw std::invalid_argument("poisson: mean must be non-negative.");
        if (mean > 500.0)
            throw std::invalid_argument("poisson: mean too large for the multiplication method.");
        const double threshold = std::exp(-mean);
        unsigned k = 0;
        double prod = uniform();
        while (prod > threshold)
        {
            ++k;
            prod *= uniform();
        }
        return k;
    }

    double Rng::laplace(double scale)
    {
        const double u = uniform() - 0.5; // [-0.5, 0.5)
        const double a = 1.0 - 2.0 * std::abs(u);
        if (a <= 0.0)
            return 0.0;
        return -scale * std::copysign(1.0, u) * std::log(a);
    }

    std::complex<double> Rng::complex_gaussian()
    {
        // |z|^2 ~ Exp(1) with uniform phase is CN(0, 1).
        const double r = std::sqrt(-std::log(1.0 - uniform()));
        return std::polar(r, two_pi * uniform());
    }

    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b)
    {
        return splitmix(splitmix(splitmix(master) ^ a) ^ (b * 0xD1B54A32D192ED03ULL));
    }
}
