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

#include "simris/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace simris
{
    namespace
    {
        const std::set<std::string> &known_keys()
        {
            static const std::set<std::string> keys = {
                "scenario.environment", "scenario.frequency_ghz", "scenario.wall", "scenario.tx", "scenario.rx",
                "scenario.ris", "scenario.elements", "scenario.element_spacing_m", "scenario.direct_link",
                "simulation.realizations", "simulation.seed", "simulation.wavefront", "simulation.los_mode",
                "simulation.scattering", "simulation.shadowing", "simulation.element_gain", "simulation.threads",
                "link.tx_power_dbw", "link.noise_dbm", "link.tx_gain", "link.rx_gain", "link.efficiency",
                "link.rules", "heatmap.x", "heatmap.y", "heatmap.rule", "heatmap.tx_power_dbw", "output.format",
                "output.path", "pathloss.los_exponent", "pathloss.los_sigma_db", "pathloss.nlos_exponent",
                "pathloss.nlos_sigma_db", "clusters.mean_count", "clusters.max_subrays",
                "clusters.azimuth_spread_deg", "clusters.elevation_spread_deg", "clusters.subray_spread_deg"};
            return keys;
        }

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return out;
        }

        class Reader
        {
        public:
            explicit Reader(const ConfigEntries &e) : entries_(e) {}

            const std::string *find(const std::string &key) const
            {
                auto it = entries_.find(key);
                return it == entries_.end() ? nullptr : &it->second;
            }

            const std::string &required(const std::string &key) const
            {
                if (const auto *v = find(key))
                    return *v;
                throw ConfigError(key, "Missing required key '" + key + "'.");
            }

            template <class Fn>
            auto convert(const std::string &key, const std::string &value, Fn fn) const
            {
                try
                {
                    return fn(value);
                }
                catch (const ConfigError &)
                {
                    throw;
                }
                catch (const std::exception &ex)
                {
                    throw ConfigError(key, "Invalid value for '" + key + "': " + ex.what());
                }
            }

            double number(const std::string &key, double fallback) const
            {
                const auto *v = find(key);
                return v ? convert(key, *v, [](const std::string &s) { return parse_number(s); }) : fallback;
            }

            std::uint64_t unsigned_integer(const std::string &key, std::uint64_t fallback) const
            {
                const auto *v = find(key);
                if (!v)
                    return fallback;
                return convert(key, *v, [](const std::string &s)
                               {
                                   const auto t = trim(s);
                                   std::uint64_t out = 0;
                                   auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
                                   if (ec != std::errc{} || p != t.data() + t.size() || t.empty())
                                       throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
                                   return out; });
            }

            bool boolean(const std::string &key, bool fallback) const
            {
                const auto *v = find(key);
                if (!v)
                    return fallback;
                return convert(key, *v, [](const std::string &s)
                               {
                                   const auto t = trim(s);
                                   if (t == "true" || t == "yes" || t == "1")
                                       return true;
                                   if (t == "false" || t == "no" || t == "0")
                                       return false;
                                   throw std::invalid_argument("expected true or false, got '" + s + "'"); });
            }

            template <class T, class Parse>
            T choice(const std::string &key, const std::string &value, Parse parse, const char *allowed) const
            {
                const auto r = parse(trim(value));
                if (!r)
                    throw ConfigError(key, "Invalid value for '" + key + "': '" + value + "' (expected " + allowed + ").");
                return *r;
            }

        private:
            const ConfigEntries &entries_;
        };

        std::string point_text(const Point3 &p)
        {
            return format_number(p.x) + "," + format_number(p.y) + "," + format_number(p.z);
        }

        std::string list_text(const std::vector<double> &v)
        {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? "," : "") + format_number(v[i]);
            return out;
        }
    }

    std::string_view to_string(OutputFormat f) { return f == OutputFormat::Binary ? "binary" : "csv"; }

    std::optional<OutputFormat> parse_output_format(std::string_view text)
    {
        if (text == "csv")
            return OutputFormat::Csv;
        if (text == "binary")
            return OutputFormat::Binary;
        return std::nullopt;
    }

    double parse_number(std::string_view text)
    {
        const auto t = trim(text);
        if (!t.empty() && t.front() == '+')
            return parse_number(t.substr(1));
        double out = 0.0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
        if (t.empty() || ec != std::errc{} || p != t.data() + t.size() || !std::isfinite(out))
            throw std::invalid_argument("expected a finite number, got '" + std::string(text) + "'");
        return out;
    }

    std::string format_number(double v)
    {
        char buf[64];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, p);
    }

    Point3 parse_point(std::string_view text)
    {
        const auto parts = split(text, ',');
        if (parts.size() != 3)
            throw std::invalid_argument("expected x,y,z, got '" + std::string(text) + "'");
        return {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
    }

    std::vector<double> parse_number_list(std::string_view text)
    {
        const auto t = trim(text);
        if (t.empty())
            return {};
        if (t.find(':') != std::string_view::npos)
        {
            const auto parts = split(t, ':');
            if (parts.size() != 3)
                throw std::invalid_argument("expected start:stop:step, got '" + std::string(text) + "'");
            const double start = parse_number(parts[0]), stop = parse_number(parts[1]), step = parse_number(parts[2]);
            if (!(step > 0.0) || stop < start)
                throw std::invalid_argument("range needs step > 0 and stop >= start");
            const double count = std::floor((stop - start) / step + 1e-9) + 1.0;
            if (count > 1e6)
                throw std::invalid_argument("range has too many points");
            std::vector<double> out;
            for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i)
                out.push_back(start + static_cast<double>(i) * step);
            return out;
        }
        std::vector<double> out;
        for (auto part : split(t, ','))
            out.push_back(parse_number(part));
        return out;
    }

    ConfigEntries read_config_entries(const std::string &text)
    {
        boost::property_tree::ptree tree;
        std::istringstream in(text);
        try
        {
            boost::property_tree::read_ini(in, tree);
        }
        catch (const boost::property_tree::ini_parser_error &ex)
        {
            throw ConfigError("", std::string("Malformed config: ") + ex.message() + " (line " +
                                      std::to_string(ex.line()) + ").");
        }

        ConfigEntries out;
        for (const auto &[section, body] : tree)
        {
            if (body.empty() && !body.data().empty())
                throw ConfigError(section, "Key '" + section + "' must be inside a section.");
            for (const auto &[key, value] : body)
                out[section + "." + key] = value.data();
        }
        return out;
    }

    RunConfig parse_config(const ConfigEntries &entries)
    {
        for (const auto &[key, value] : entries)
            if (!known_keys().contains(key))
                throw ConfigError(key, "Unknown config key '" + key + "'.");

        const Reader rd(entries);

        Scenario scn;
        scn.environment = rd.choice<Environment>("scenario.environment", rd.required("scenario.environment"),
                                                 parse_environment, "inh or umi");
        scn.frequency_ghz = rd.convert("scenario.frequency_ghz", rd.required("scenario.frequency_ghz"),
                                       [](const std::string &s) { return parse_number(s); });
        scn.wall = rd.choice<WallPlacement>("scenario.wall", rd.required("scenario.wall"), parse_wall,
                                            "side or opposite");
        for (auto [key, target] : {std::pair{"scenario.tx", &scn.tx}, std::pair{"scenario.rx", &scn.rx},
                                   std::pair{"scenario.ris", &scn.ris}})
            *target = rd.convert(key, rd.required(key), [](const std::string &s) { return parse_point(s); });
        scn.n_elements = rd.unsigned_integer("scenario.elements", scn.n_elements);
        if (rd.find("scenario.element_spacing_m"))
            scn.element_spacing = rd.number("scenario.element_spacing_m", 0.0);
        scn.direct_link_present = rd.boolean("scenario.direct_link", true);

        if (!is_supported_frequency(scn.frequency_ghz))
            throw ConfigError("scenario.frequency_ghz", "Unsupported frequency " + format_number(scn.frequency_ghz) +
                                                            " GHz (expected 28 or 73).");

        RunConfig run;
        ChannelConfig &cfg = run.channel;
        cfg = ChannelConfig::for_scenario(scn);

        cfg.realizations = rd.unsigned_integer("simulation.realizations", 1);
        cfg.seed = rd.unsigned_integer("simulation.seed", 0);
        if (const auto *v = rd.find("simulation.wavefront"))
            cfg.wavefront = rd.choice<Wavefront>("simulation.wavefront", *v, parse_wavefront,
                                                 "auto, planar or spherical");
        if (const auto *v = rd.find("simulation.los_mode"))
            cfg.los_mode = rd.choice<LosMode>("simulation.los_mode", *v, parse_los_mode,
                                              "stochastic, always or never");
        cfg.scattering = rd.boolean("simulation.scattering", true);
        cfg.shadowing = rd.boolean("simulation.shadowing", true);
        if (rd.find("simulation.element_gain"))
            cfg.fixed_element_gain = rd.number("simulation.element_gain", 0.0);
        run.threads = static_cast<unsigned>(rd.unsigned_integer("simulation.threads", 0));

        cfg.link.gt = rd.number("link.tx_gain", cfg.link.gt);
        cfg.link.gr = rd.number("link.rx_gain", cfg.link.gr);
        cfg.link.efficiency = rd.number("link.efficiency", cfg.link.efficiency);
        if (const auto *v = rd.find("link.tx_power_dbw"))
            run.tx_power_dbw = rd.convert("link.tx_power_dbw", *v, [](const std::string &s) { return parse_number_list(s); });
        run.noise_dbm = rd.number("link.noise_dbm", run.noise_dbm);
        if (const auto *v = rd.find("link.rules"))
        {
            run.rules.clear();
            for (auto part : split(*v, ','))
                run.rules.push_back(rd.choice<ProfileRule>("link.rules", std::string(part), parse_profile_rule,
                                                           "off, random or optimal"));
        }

        if (const auto *v = rd.find("heatmap.x"))
            run.heatmap.x = rd.convert("heatmap.x", *v, [](const std::string &s) { return parse_number_list(s); });
        if (const auto *v = rd.find("heatmap.y"))
            run.heatmap.y = rd.convert("heatmap.y", *v, [](const std::string &s) { return parse_number_list(s); });
        if (const auto *v = rd.find("heatmap.rule"))
            run.heatmap_rule = rd.choice<ProfileRule>("heatmap.rule", *v, parse_profile_rule, "off, random or optimal");
        run.heatmap_tx_power_dbw = rd.number("heatmap.tx_power_dbw", run.heatmap_tx_power_dbw);

        if (const auto *v = rd.find("output.format"))
            run.format = rd.choice<OutputFormat>("output.format", *v, parse_output_format, "csv or binary");
        if (const auto *v = rd.find("output.path"))
            run.out_path = std::string(trim(*v));

        cfg.path_loss.los.exponent = rd.number("pathloss.los_exponent", cfg.path_loss.los.exponent);
        cfg.path_loss.los.sigma_db = rd.number("pathloss.los_sigma_db", cfg.path_loss.los.sigma_db);
        cfg.path_loss.nlos.exponent = rd.number("pathloss.nlos_exponent", cfg.path_loss.nlos.exponent);
        cfg.path_loss.nlos.sigma_db = rd.number("pathloss.nlos_sigma_db", cfg.path_loss.nlos.sigma_db);

        auto &cs = cfg.cluster_stats;
        cs.mean_clusters = rd.number("clusters.mean_count", cs.mean_clusters);
        cs.max_subrays = static_cast<unsigned>(rd.unsigned_integer("clusters.max_subrays", cs.max_subrays));
        cs.azimuth_range_deg = rd.number("clusters.azimuth_spread_deg", cs.azimuth_range_deg);
        cs.elevation_range_deg = rd.number("clusters.elevation_spread_deg", cs.elevation_range_deg);
        cs.subray_spread_deg = rd.number("clusters.subray_spread_deg", cs.subray_spread_deg);

        return run;
    }

    RunConfig parse_config(const std::string &text) { return parse_config(read_config_entries(text)); }

    std::string serialize_config(const RunConfig &run)
    {
        const ChannelConfig &cfg = run.channel;
        const Scenario &scn = cfg.scenario;
        std::ostringstream o;

        o << "[scenario]\n"
          << "environment=" << to_string(scn.environment) << "\n"
          << "frequency_ghz=" << format_number(scn.frequency_ghz) << "\n"
          << "wall=" << to_string(scn.wall) << "\n"
          << "tx=" << point_text(scn.tx) << "\n"
          << "rx=" << point_text(scn.rx) << "\n"
          << "ris=" << point_text(scn.ris) << "\n"
          << "elements=" << scn.n_elements << "\n";
        if (scn.element_spacing)
            o << "element_spacing_m=" << format_number(*scn.element_spacing) << "\n";
        o << "direct_link=" << (scn.direct_link_present ? "true" : "false") << "\n\n";

        o << "[simulation]\n"
          << "realizations=" << cfg.realizations << "\n"
          << "seed=" << cfg.seed << "\n"
          << "wavefront=" << to_string(cfg.wavefront) << "\n"
          << "los_mode=" << to_string(cfg.los_mode) << "\n"
          << "scattering=" << (cfg.scattering ? "true" : "false") << "\n"
          << "shadowing=" << (cfg.shadowing ? "true" : "false") << "\n";
        if (cfg.fixed_element_gain)
            o << "element_gain=" << format_number(*cfg.fixed_element_gain) << "\n";
        o << "threads=" << run.threads << "\n\n";

        o << "[link]\n"
          << "tx_power_dbw=" << list_text(run.tx_power_dbw) << "\n"
          << "noise_dbm=" << format_number(run.noise_dbm) << "\n"
          << "tx_gain=" << format_number(cfg.link.gt) << "\n"
          << "rx_gain=" << format_number(cfg.link.gr) << "\n"
          << "efficiency=" << format_number(cfg.link.efficiency) << "\n"
          << "rules=";
        for (std::size_t i = 0; i < run.rules.size(); ++i)
            o << (i ? "," : "") << to_string(run.rules[i]);
        o << "\n\n";

        o << "[heatmap]\n"
          << "x=" << list_text(run.heatmap.x) << "\n"
          << "y=" << list_text(run.heatmap.y) << "\n"
          << "rule=" << to_string(run.heatmap_rule) << "\n"
          << "tx_power_dbw=" << format_number(run.heatmap_tx_power_dbw) << "\n\n";

        o << "[output]\n"
          << "format=" << to_string(run.format) << "\n"
          << "path=" << run.out_path << "\n\n";

        o << "[pathloss]\n"
          << "los_exponent=" << format_number(cfg.path_loss.los.exponent) << "\n"
          << "los_sigma_db=" << format_number(cfg.path_loss.los.sigma_db) << "\n"
          << "nlos_exponent=" << format_number(cfg.path_loss.nlos.exponent) << "\n"
          << "nlos_sigma_db=" << format_number(cfg.path_loss.nlos.sigma_db) << "\n\n";

        const auto &cs = cfg.cluster_stats;
        o << "[clusters]\n"
          << "mean_count=" << format_number(cs.mean_clusters) << "\n"
          << "max_subrays=" << cs.max_subrays << "\n"
          << "azimuth_spread_deg=" << format_number(cs.azimuth_range_deg) << "\n"
          << "elevation_spread_deg=" << format_number(cs.elevation_range_deg) << "\n"
          << "subray_spread_deg=" << format_number(cs.subray_spread_deg) << "\n";
        return o.str();
    }

    std::string output_config_text(const RunConfig &cfg)
    {
        RunConfig copy = cfg;
        copy.threads = 0;
        copy.out_path.clear();
        return serialize_config(copy);
    }
}
