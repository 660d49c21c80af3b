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

#include "simris/dump.hpp"
#include "simris/parallel.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace simris
{
    namespace
    {
        constexpr std::size_t block_size = 256;

        template <class T>
        void put_le(std::ostream &out, T v)
        {
            unsigned char bytes[sizeof(T)];
            std::memcpy(bytes, &v, sizeof(T));
            if constexpr (std::endian::native == std::endian::big)
                std::reverse(bytes, bytes + sizeof(T));
            out.write(reinterpret_cast<const char *>(bytes), sizeof(T));
        }

        template <class T>
        T get_le(std::istream &in)
        {
            unsigned char bytes[sizeof(T)];
            if (!in.read(reinterpret_cast<char *>(bytes), sizeof(T)))
                throw DumpFormatError("Truncated binary dump.");
            if constexpr (std::endian::native == std::endian::big)
                std::reverse(bytes, bytes + sizeof(T));
            T v;
            std::memcpy(&v, bytes, sizeof(T));
            return v;
        }

        void put_complex(std::ostream &out, cplx z)
        {
            put_le(out, static_cast<float>(z.real()));
            put_le(out, static_cast<float>(z.imag()));
        }

        void csv_complex(std::string &row, cplx z)
        {
            char buf[64];
            const int n = std::snprintf(buf, sizeof buf, ",%.9g,%.9g", static_cast<double>(static_cast<float>(z.real())),
                                        static_cast<double>(static_cast<float>(z.imag())));
            row.append(buf, static_cast<std::size_t>(n));
        }

        void write_binary_header(std::ostream &out, std::uint64_t n, std::uint64_t r, std::uint64_t seed,
                                 const std::string &config)
        {
            out.write(dump_magic, sizeof dump_magic);
            put_le(out, dump_version);
            put_le(out, n);
            put_le(out, r);
            put_le(out, seed);
            put_le(out, static_cast<std::uint32_t>(config.size()));
            out.write(config.data(), static_cast<std::streamsize>(config.size()));
        }

        void write_csv_header(std::ostream &out, std::uint64_t n, std::uint64_t r, std::uint64_t seed,
                              const std::string &config)
        {
            out << "# simris channel dump\n"
                << "# version=" << dump_version << "\n"
                << "# n_elements=" << n << "\n"
                << "# realizations=" << r << "\n"
                << "# seed=" << seed << "\n"
                << "# config:\n";
            std::istringstream lines(config);
            for (std::string line; std::getline(lines, line);)
                out << (line.empty() ? "#" : "# ") << line << "\n";
            out << "index";
            for (const char *name : {"h", "g"})
                for (std::uint64_t i = 0; i < n; ++i)
                    out << ',' << name << i << "_re," << name << i << "_im";
            out << ",hsiso_re,hsiso_im\n";
        }

        float parse_float(std::string_view s)
        {
            float v = 0.0f;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size())
                throw DumpFormatError("Bad number '" + std::string(s) + "' in CSV dump.");
            return v;
        }

        std::uint64_t header_value(const std::string &line, const std::string &key)
        {
            const std::string prefix = "# " + key + "=";
            if (line.rfind(prefix, 0) != 0)
                throw DumpFormatError("Expected '" + prefix + "' in CSV dump header.");
            std::uint64_t v = 0;
            const char *b = line.data() + prefix.size(), *e = line.data() + line.size();
            auto [p, ec] = std::from_chars(b, e, v);
            if (ec != std::errc{} || p != e)
                throw DumpFormatError("Bad header value in '" + line + "'.");
            return v;
        }
    }

    void write_channel_dump(std::ostream &out, const RunConfig &run)
    {
        const ChannelConfig &cfg = run.channel;
        check_config(cfg);
        const std::uint64_t n = cfg.scenario.n_elements, r = cfg.realizations;
        const std::string config = output_config_text(run);

        const bool binary = run.format == OutputFormat::Binary;
        if (binary)
            write_binary_header(out, n, r, cfg.seed, config);
        else
            write_csv_header(out, n, r, cfg.seed, config);

        std::vector<ChannelRealization> block;
        for (std::size_t start = 0; start < r; start += block_size)
        {
            const std::size_t count = std::min<std::size_t>(block_size, r - start);
            block.assign(count, {});
            parallel_for(count, run.threads, [&](std::size_t i) { block[i] = realization(cfg, start + i); });

            for (const auto &re : block)
            {
                if (binary)
                {
                    for (cplx z : re.h)
                        put_complex(out, z);
                    for (cplx z : re.g)
                        put_complex(out, z);
                    put_complex(out, re.h_siso);
                }
                else
                {
                    std::string row = std::to_string(re.index);
                    for (cplx z : re.h)
                        csv_complex(row, z);
                    for (cplx z : re.g)
                        csv_complex(row, z);
                    csv_complex(row, re.h_siso);
                    row += '\n';
                    out << row;
                }
            }
        }
        out.flush();
    }

    ChannelDump read_channel_dump_binary(std::istream &in)
    {
        char magic[8];
        if (!in.read(magic, sizeof magic) || std::memcmp(magic, dump_magic, sizeof magic) != 0)
            throw DumpFormatError("Not a binary channel dump (bad magic).");
        if (get_le<std::uint32_t>(in) != dump_version)
            throw DumpFormatError("Unsupported channel dump version.");

        ChannelDump d;
        d.n_elements = get_le<std::uint64_t>(in);
        d.realizations = get_le<std::uint64_t>(in);
        d.seed = get_le<std::uint64_t>(in);
        const auto len = get_le<std::uint32_t>(in);
        d.config_text.resize(len);
        if (!in.read(d.config_text.data(), len))
            throw DumpFormatError("Truncated binary dump.");

        auto get_complex = [&]
        {
            const float re = get_le<float>(in);
            const float im = get_le<float>(in);
            return cfloat{re, im};
        };
        d.h.reserve(d.n_elements * d.realizations);
        d.g.reserve(d.n_elements * d.realizations);
        for (std::uint64_t r = 0; r < d.realizations; ++r)
        {
            for (std::uint64_t i = 0; i < d.n_elements; ++i)
                d.h.push_back(get_complex());
            for (std::uint64_t i = 0; i < d.n_elements; ++i)
                d.g.push_back(get_complex());
            d.h_siso.push_back(get_complex());
        }
        return d;
    }

    ChannelDump read_channel_dump_csv(std::istream &in)
    {
        std::string line;
        auto next = [&]
        {
            if (!std::getline(in, line))
                throw DumpFormatError("Truncated CSV dump.");
        };

        next();
        if (line != "# simris channel dump")
            throw DumpFormatError("Not a CSV channel dump.");
        next();
        if (header_value(line, "version") != dump_version)
            throw DumpFormatError("Unsupported channel dump version.");

        ChannelDump d;
        next();
        d.n_elements = header_value(line, "n_elements");
        next();
        d.realizations = header_value(line, "realizations");
        next();
        d.seed = header_value(line, "seed");
        next();
        if (line != "# config:")
            throw DumpFormatError("Missing config block in CSV dump.");
        while (true)
        {
            next();
            if (line.empty() || line[0] != '#')
                break;
            d.config_text += (line.size() > 1 ? line.substr(2) : std::string{}) + "\n";
        }
        // `line` now holds the column row.

        const std::size_t fields = 1 + 2 * (2 * d.n_elements + 1);
        for (std::uint64_t r = 0; r < d.realizations; ++r)
        {
            next();
            std::vector<std::string_view> cols;
            std::string_view rest(line);
            while (true)
            {
                const auto pos = rest.find(',');
                cols.push_back(rest.substr(0, pos));
                if (pos == std::string_view::npos)
                    break;
                rest.remove_prefix(pos + 1);
            }
            if (cols.size() != fields)
                throw DumpFormatError("CSV dump row " + std::to_string(r) + " has the wrong column count.");
            auto value = [&](std::size_t k) { return cfloat{parse_float(cols[1 + 2 * k]), parse_float(cols[2 + 2 * k])}; };
            for (std::uint64_t i = 0; i < d.n_elements; ++i)
                d.h.push_back(value(i));
            for (std::uint64_t i = 0; i < d.n_elements; ++i)
                d.g.push_back(value(d.n_elements + i));
            d.h_siso.push_back(value(2 * d.n_elements));
        }
        return d;
    }

    ChannelDump read_channel_dump(std::istream &in)
    {
        const int first = in.peek();
        if (first == '#')
            return read_channel_dump_csv(in);
        return read_channel_dump_binary(in);
    }
}
