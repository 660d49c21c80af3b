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

#include "simris/cli.hpp"
#include "simris/dump.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace simris
{
    namespace
    {
        void write_config_header(std::ostream &out, const char *title, const RunConfig &run)
        {
            out << "# " << title << "\n"
                << "# seed=" << run.channel.seed << "\n"
                << "# config:\n";
            std::istringstream lines(output_config_text(run));
            for (std::string line; std::getline(lines, line);)
                out << (line.empty() ? "#" : "# ") << line << "\n";
        }

        // Opens run.out_path, or hands back `fallback` for "" and "-".
        template <class Fn>
        void with_output(const RunConfig &run, std::ostream &fallback, bool binary, Fn fn)
        {
            if (run.out_path.empty() || run.out_path == "-")
            {
                fn(fallback);
                if (!fallback)
                    throw IoError("Failed to write output.");
                return;
            }
            std::ofstream file(run.out_path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
            if (!file)
                throw IoError("Cannot open '" + run.out_path + "' for writing.");
            fn(file);
            file.close();
            if (!file)
                throw IoError("Failed to write '" + run.out_path + "'.");
        }

        std::string read_file(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw IoError("Cannot read '" + path + "'.");
            std::ostringstream s;
            s << in.rdbuf();
            return s.str();
        }

        struct Flags
        {
            std::map<std::string, std::string> values; // config key -> flag text
            bool no_direct_link = false;
            std::string config_path;
        };

        void add_run_options(CLI::App *cmd, Flags &f)
        {
            auto opt = [&](const char *name, const char *key, const char *help)
            { cmd->add_option_function<std::string>(name, [&f, key](const std::string &v) { f.values[key] = v; }, help); };

            opt("--env", "scenario.environment", "Environment: inh or umi");
            opt("--freq", "scenario.frequency_ghz", "Carrier frequency in GHz: 28 or 73");
            opt("--wall", "scenario.wall", "RIS placement: side or opposite");
            opt("--tx", "scenario.tx", "Tx position x,y,z in meters");
            opt("--rx", "scenario.rx", "Rx position x,y,z in meters");
            opt("--ris", "scenario.ris", "RIS reference position x,y,z in meters");
            opt("--elements", "scenario.elements", "Number of RIS elements (perfect square)");
            opt("--spacing", "scenario.element_spacing_m", "Element spacing in meters (default lambda/2)");
            cmd->add_flag("--no-direct-link", f.no_direct_link, "Block the Tx-Rx link");
            opt("--realizations", "simulation.realizations", "Number of channel realizations");
            opt("--seed", "simulation.seed", "Master seed");
            opt("--wavefront", "simulation.wavefront", "auto, planar or spherical");
            opt("--threads", "simulation.threads", "Worker threads (0 = all cores)");
            opt("--pt", "link.tx_power_dbw", "Transmit powers in dBW: list a,b,c or start:stop:step");
            opt("--noise-dbm", "link.noise_dbm", "Noise power in dBm");
            opt("--rules", "link.rules", "Phase rules: comma list of off, random, optimal");
            opt("--grid-x", "heatmap.x", "Heatmap Rx x coordinates: list or start:stop:step");
            opt("--grid-y", "heatmap.y", "Heatmap Rx y coordinates: list or start:stop:step");
            opt("--heatmap-rule", "heatmap.rule", "Phase rule for the heatmap");
            opt("--heatmap-pt", "heatmap.tx_power_dbw", "Transmit power for the heatmap in dBW");
            opt("--format", "output.format", "Dump format: csv or binary");
            opt("--out", "output.path", "Output path (default stdout)");
            cmd->add_option("--config", f.config_path, "INI config file; its keys override flags");
        }

        RunConfig resolve(const Flags &f, const std::optional<std::string> &env_seed)
        {
            ConfigEntries entries;
            if (env_seed)
                entries["simulation.seed"] = *env_seed;
            for (const auto &[key, value] : f.values)
                entries[key] = value;
            if (f.no_direct_link)
                entries["scenario.direct_link"] = "false";
            if (!f.config_path.empty())
                for (const auto &[key, value] : read_config_entries(read_file(f.config_path)))
                    entries[key] = value;
            return parse_config(entries);
        }
    }

    void write_rate_table(std::ostream &out, const RunConfig &run, const std::vector<RateRow> &rows)
    {
        write_config_header(out, "simris rate table", run);
        out << "rule,tx_power_dbw,tx_power_dbm,noise_dbm,mean_rate,rate_std,rate_stderr,mean_snr_db,count\n";
        for (const auto &r : rows)
            out << to_string(r.rule) << ',' << format_number(r.tx_power_dbw) << ','
                << format_number(r.report.tx_power_dbm) << ',' << format_number(r.report.noise_dbm) << ','
                << format_number(r.report.mean_rate) << ',' << format_number(r.report.rate_std) << ','
                << format_number(r.report.rate_stderr) << ',' << format_number(r.report.mean_snr_db) << ','
                << r.report.count << '\n';
    }

    void write_heatmap(std::ostream &out, const RunConfig &run, const Heatmap &map)
    {
        write_config_header(out, "simris rate heatmap", run);
        out << "ix,iy,x,y,seed,mean_rate,rate_std,rate_stderr,mean_snr_db,count\n";
        const std::size_t nx = map.grid.x.size();
        for (std::size_t i = 0; i < map.cells.size(); ++i)
        {
            const auto &c = map.cells[i];
            out << i % nx << ',' << i / nx << ',' << format_number(c.x) << ',' << format_number(c.y) << ',' << c.seed
                << ',' << format_number(c.report.mean_rate) << ',' << format_number(c.report.rate_std) << ','
                << format_number(c.report.rate_stderr) << ',' << format_number(c.report.mean_snr_db) << ','
                << c.report.count << '\n';
        }
    }

    void cmd_simulate(const RunConfig &run, std::ostream &out)
    {
        check_config(run.channel);
        with_output(run, out, run.format == OutputFormat::Binary,
                    [&](std::ostream &o) { write_channel_dump(o, run); });
    }

    void cmd_rate(const RunConfig &run, std::ostream &out)
    {
        if (run.rules.empty())
            throw ConfigError("link.rules", "At least one phase rule is required.");
        if (run.tx_power_dbw.empty())
            throw ConfigError("link.tx_power_dbw", "At least one transmit power is required.");
        const auto rows = rate_table(run.channel, run.rules, run.tx_power_dbw, run.noise_dbm, run.threads);
        with_output(run, out, false, [&](std::ostream &o) { write_rate_table(o, run, rows); });
    }

    void cmd_heatmap(const RunConfig &run, std::ostream &out)
    {
        if (run.heatmap.x.empty())
            throw ConfigError("heatmap.x", "Heatmap needs at least one x coordinate.");
        if (run.heatmap.y.empty())
            throw ConfigError("heatmap.y", "Heatmap needs at least one y coordinate.");
        const auto map = rate_heatmap(run.channel, run.heatmap, run.heatmap_rule, db_to_linear(run.heatmap_tx_power_dbw),
                                      dbm_to_watts(run.noise_dbm), run.threads);
        with_output(run, out, false, [&](std::ostream &o) { write_heatmap(o, run, map); });
    }

    int cmd_validate(const RunConfig &run, std::ostream &out)
    {
        const auto violations = validate_scenario(run.channel.scenario);
        if (violations.empty())
        {
            out << "OK\n";
            return exit_code::ok;
        }
        for (const auto &v : violations)
            out << v.code << '\t' << v.message << '\n';
        return exit_code::violations;
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                const std::optional<std::string> &env_seed)
    {
        CLI::App app{"Channel simulator for RIS-assisted mmWave links", "simris"};
        app.require_subcommand(1);

        Flags flags;
        auto *simulate = app.add_subcommand("simulate", "Write channel realizations (h, g, h_SISO) to a dump");
        auto *rate = app.add_subcommand("rate", "Achievable-rate table over phase rules and transmit powers");
        auto *heatmap = app.add_subcommand("heatmap", "Mean achievable rate over a grid of Rx positions");
        auto *validate = app.add_subcommand("validate", "Check scenario constraints");
        for (auto *cmd : {simulate, rate, heatmap, validate})
            add_run_options(cmd, flags);

        auto *recommend = app.add_subcommand("recommend", "Print a valid example config");
        std::string rec_env = "inh", rec_wall = "side";
        recommend->add_option("--env", rec_env, "Environment: inh or umi");
        recommend->add_option("--wall", rec_wall, "RIS placement: side or opposite");

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try
        {
            app.parse(std::move(reversed));
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_code::ok : exit_code::config_error;
        }

        try
        {
            if (recommend->parsed())
            {
                const auto env = parse_environment(rec_env);
                const auto wall = parse_wall(rec_wall);
                if (!env || !wall)
                    throw ConfigError("recommend", "Expected --env inh|umi and --wall side|opposite.");
                RunConfig run;
                run.channel = ChannelConfig::for_scenario(recommend_positions(*env, *wall));
                out << output_config_text(run);
                return exit_code::ok;
            }

            const RunConfig run = resolve(flags, env_seed);
            if (validate->parsed())
                return cmd_validate(run, out);
            if (simulate->parsed())
                cmd_simulate(run, out);
            else if (rate->parsed())
                cmd_rate(run, out);
            else if (heatmap->parsed())
                cmd_heatmap(run, out);
            return exit_code::ok;
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_code::config_error;
        }
        catch (const ScenarioError &e)
        {
            err << "scenario violations:\n";
            for (const auto &v : e.violations())
                err << v.code << '\t' << v.message << '\n';
            return exit_code::violations;
        }
        catch (const IoError &e)
        {
            err << "I/O error: " << e.what() << '\n';
            return exit_code::io_error;
        }
        catch (const std::invalid_argument &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_code::config_error;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_code::failure;
        }
    }
}
