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

#ifndef SIMRIS_CONFIG_HPP
#define SIMRIS_CONFIG_HPP

#include "simris/channel.hpp"
#include "simris/metrics.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simris
{
    enum class OutputFormat
    {
        Csv,
        Binary
    };

    std::string_view to_string(OutputFormat f);
    std::optional<OutputFormat> parse_output_format(std::string_view text);

    // Everything a CLI run needs: the channel configuration plus the rate,
    // heatmap and output settings.
    struct RunConfig
    {
        ChannelConfig channel;
        unsigned threads = 0; // 0 = hardware concurrency

        std::vector<double> tx_power_dbw = default_tx_power_sweep_dbw();
        double noise_dbm = default_noise_dbm;
        std::vector<ProfileRule> rules = {ProfileRule::Off, ProfileRule::Random, ProfileRule::Optimal};

        RxGrid heatmap;
        ProfileRule heatmap_rule = ProfileRule::Optimal;
        double heatmap_tx_power_dbw = 0.0;

        OutputFormat format = OutputFormat::Csv;
        std::string out_path; // empty = stdout where the command allows it

        friend bool operator==(const RunConfig &, const RunConfig &) = default;
    };

    // Parse or conversion failure; `key` names the offending "section.key".
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string key, const std::string &what) : std::runtime_error(what), key_(std::move(key)) {}
        const std::string &key() const { return key_; }

    private:
        std::string key_;
    };

    // Flat "section.key" -> value view of a config; later layers override
    // earlier ones key by key.
    using ConfigEntries = std::map<std::string, std::string>;

    ConfigEntries read_config_entries(const std::string &text);

    // Builds a RunConfig; throws ConfigError for missing required keys
    // (scenario.environment, scenario.frequency_ghz, scenario.wall,
    // scenario.tx, scenario.rx, scenario.ris), unknown keys and bad values.
    RunConfig parse_config(const ConfigEntries &entries);
    RunConfig parse_config(const std::string &text);

    // INI text with every key written out; parse_config(serialize_config(c)) == c.
    std::string serialize_config(const RunConfig &cfg);

    // Config text embedded in output files: the worker count and the output
    // path are dropped so that outputs do not depend on them.
    std::string output_config_text(const RunConfig &cfg);

    // "a,b,c" or "start:stop:step" (inclusive).
    std::vector<double> parse_number_list(std::string_view text);
    Point3 parse_point(std::string_view text);
    double parse_number(std::string_view text);
    std::string format_number(double v); // shortest text that round-trips
}

#endif
