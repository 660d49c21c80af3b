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

#ifndef SIMRIS_RANDOM_HPP
#define SIMRIS_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace simris
{
    // Random source with portable distributions. The std:: distributions are
    // implementation-defined, so every transform below is written out on top
    // of the (fully specified) 64-bit Mersenne Twister output.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next_u64() { return engine_(); }

        // Uniform on [0, 1) with 53 random bits.
        double uniform();
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

        // Uniform integer on [lo, hi], unbiased.
        std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

        // Standard normal via Box-Muller (always consumes two uniforms).
        double normal();

        // Knuth's multiplication method; intended for small means.
        unsigned poisson(double mean);

        // Zero-mean Laplace with scale b (std = sqrt(2) b).
        double laplace(double scale);

        // Circularly-symmetric complex Gaussian CN(0, 1).
        std::complex<double> complex_gaussian();

        bool bernoulli(double p) { return uniform() < p; }

    private:
        std::mt19937_64 engine_;
    };

    // Stateless substream derivation (SplitMix64 finalizer chained over the inputs).
    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);
}

#endif
