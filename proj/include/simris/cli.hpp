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

#ifndef SIMRIS_CLI_HPP
#define SIMRIS_CLI_HPP

#include "simris/config.hpp"
#include "simris/metrics.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simris
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int failure = 1;
        inline constexpr int config_error = 2;
        inline constexpr int violations = 3;
        inline constexpr int io_error = 4;
    }

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Output files start with "# " header lines carrying the resolved config
    // (and thereby the master seed).
    void write_rate_table(std::ostream &out, const RunConfig &run, const std::vector<RateRow> &rows);
    void write_heatmap(std::ostream &out, const RunConfig &run, const Heatmap &map);

    // Each command writes to run.out_path, or to `out` when the path is empty
    // or "-". Scenario problems raise ScenarioError, file problems IoError.
    void cmd_simulate(const RunConfig &run, std::ostream &out);
    void cmd_rate(const RunConfig &run, std::ostream &out);
    void cmd_heatmap(const RunConfig &run, std::ostream &out);

    // Prints one "CODE<TAB>message" line per violation; returns the exit code.
    int cmd_validate(const RunConfig &run, std::ostream &out);

    // Command-line entry point. `env_seed` is the value of SIMRIS_SEED, if set.
    // Precedence, lowest first: built-in defaults, SIMRIS_SEED, flags, --config file.
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                const std::optional<std::string> &env_seed = std::nullopt);
}

#endif
