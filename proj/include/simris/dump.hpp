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

#ifndef SIMRIS_DUMP_HPP
#define SIMRIS_DUMP_HPP

#include "simris/channel.hpp"
#include "simris/config.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace simris
{
    // Channel dumps store h, g and h_SISO as complex64 (two float32).
    //
    // Binary layout, little-endian:
    //   char[8]  magic "SIMRISCH"
    //   u32      version (1)
    //   u64      N, R, master seed
    //   u32      length of the config text, then the text (INI)
    //   R records of (N + N + 1) float32 pairs: h, g, h_SISO
    //
    // CSV: "# "-prefixed header lines (format, N, R, seed, config text), a
    // column row, then one row per realization with values printed at 9
    // significant digits so every float32 survives the round trip.
    inline constexpr char dump_magic[8] = {'S', 'I', 'M', 'R', 'I', 'S', 'C', 'H'};
    inline constexpr std::uint32_t dump_version = 1;

    using cfloat = std::complex<float>;

    struct ChannelDump
    {
        std::uint64_t n_elements = 0;
        std::uint64_t realizations = 0;
        std::uint64_t seed = 0;
        std::string config_text;
        std::vector<cfloat> h;      // R x N, realization-major
        std::vector<cfloat> g;      // R x N
        std::vector<cfloat> h_siso; // R

        friend bool operator==(const ChannelDump &, const ChannelDump &) = default;
    };

    class DumpFormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Streams the realizations of run.channel to `out` in run.format.
    // Realizations are generated in parallel blocks; output order is by index.
    void write_channel_dump(std::ostream &out, const RunConfig &run);

    ChannelDump read_channel_dump(std::istream &in);
    ChannelDump read_channel_dump_binary(std::istream &in);
    ChannelDump read_channel_dump_csv(std::istream &in);
}

#endif
