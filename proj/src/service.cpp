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

#include "simris/service.hpp"
#include "simris/metrics.hpp"

#include <httplib.h>

#include <algorithm>
#include <cmath>
#include <set>

using nlohmann::json;

namespace simris
{
    namespace
    {
        const std::set<std::string> config_sections = {"scenario", "simulation", "link", "pathloss", "clusters"};

        struct ServiceError
        {
            int status;
            std::string code;
            std::string message;
            std::string key;
            std::vector<Violation> violations;
        };

        struct Cancelled
        {
        };

        json violations_json(const std::vector<Violation> &v)
        {
            json out = json::array();
            for (const auto &x : v)
                out.push_back({{"code", x.code}, {"message", x.message}});
            return out;
        }

        ServiceResponse respond(int status, json body)
        {
            body["schema_version"] = service_schema_version;
            return {status, body.dump()};
        }

        ServiceResponse error_response(const ServiceError &e)
        {
            json err = {{"code", e.code}, {"message", e.message}, {"violations", violations_json(e.violations)}};
            if (!e.key.empty())
                err["key"] = e.key;
            return respond(e.status, {{"error", err}});
        }

        // Runs `fn`, mapping every failure to a structured error body.
        template <class Fn>
        ServiceResponse guarded(Fn fn)
        {
            try
            {
                return fn();
            }
            catch (const ServiceError &e)
            {
                return error_response(e);
            }
            catch (const json::exception &e)
            {
                return error_response({400, "INVALID_JSON", e.what(), "", {}});
            }
            catch (const ConfigError &e)
            {
                return error_response({400, "CONFIG_ERROR", e.what(), e.key(), {}});
            }
            catch (const ScenarioError &e)
            {
                return error_response({422, "SCENARIO_INVALID", e.what(), "", e.violations()});
            }
            catch (const std::invalid_argument &e)
            {
                return error_response({400, "CONFIG_ERROR", e.what(), "", {}});
            }
            catch (const std::exception &e)
            {
                return error_response({500, "INTERNAL_ERROR", e.what(), "", {}});
            }
        }

        json parse_body(const std::string &body)
        {
            json j = json::parse(body);
            if (!j.is_object())
                throw ServiceError{400, "INVALID_JSON", "Request body must be a JSON object.", "", {}};
            return j;
        }

        void check_top_level(const json &body, const std::set<std::string> &extra)
        {
            for (const auto &[key, value] : body.items())
                if (!config_sections.contains(key) && !extra.contains(key))
                    throw ConfigError(key, "Unknown request field '" + key + "'.");
        }

        std::string scalar_text(const std::string &key, const json &v)
        {
            if (v.is_string())
                return v.get<std::string>();
            if (v.is_boolean())
                return v.get<bool>() ? "true" : "false";
            if (v.is_number_unsigned())
                return std::to_string(v.get<std::uint64_t>());
            if (v.is_number_integer())
                return std::to_string(v.get<std::int64_t>());
            if (v.is_number_float())
                return format_number(v.get<double>());
            throw ConfigError(key, "Unsupported value type for '" + key + "'.");
        }

        std::vector<ProfileRule> rules_from_json(const json &v)
        {
            std::vector<ProfileRule> out;
            auto add = [&](const json &item)
            {
                const auto r = item.is_string() ? parse_profile_rule(item.get<std::string>()) : std::nullopt;
                if (!r)
                    throw ConfigError("profile_rule", "profile_rule must be off, random or optimal.");
                out.push_back(*r);
            };
            if (v.is_array())
                for (const auto &item : v)
                    add(item);
            else
                add(v);
            if (out.empty())
                throw ConfigError("profile_rule", "profile_rule must name at least one rule.");
            return out;
        }

        RunConfig run_from_body(const json &body, const ServiceOptions &opts)
        {
            RunConfig run = parse_config(config_entries_from_json(body));
            run.threads = opts.threads;
            if (run.channel.realizations > opts.max_realizations)
                throw ServiceError{400, "LIMIT_EXCEEDED",
                                   "realizations exceeds the service cap of " + std::to_string(opts.max_realizations) + ".",
                                   "simulation.realizations", {}};
            return run;
        }

        json histogram_json(std::span<const double> gains, double pt_w, double n0_w, std::size_t bins)
        {
            std::vector<double> snr_db;
            std::size_t zero = 0;
            for (double g : gains)
            {
                const double rho = pt_w * g / n0_w;
                if (rho > 0.0)
                    snr_db.push_back(10.0 * std::log10(rho));
                else
                    ++zero;
            }
            json out = {{"zero_gain_count", zero}};
            if (snr_db.empty())
            {
                out["bin_edges_db"] = json::array();
                out["counts"] = json::array();
                return out;
            }
            const auto [lo_it, hi_it] = std::minmax_element(snr_db.begin(), snr_db.end());
            const double lo = *lo_it;
            const double hi = *hi_it > lo ? *hi_it : lo + 1.0;
            const double width = (hi - lo) / static_cast<double>(bins);
            std::vector<std::size_t> counts(bins, 0);
            for (double s : snr_db)
                ++counts[std::min(bins - 1, static_cast<std::size_t>((s - lo) / width))];
            json edges = json::array();
            for (std::size_t b = 0; b <= bins; ++b)
                edges.push_back(lo + static_cast<double>(b) * width);
            out["bin_edges_db"] = edges;
            out["counts"] = counts;
            return out;
        }

        std::vector<double> number_array(const json &v, const std::string &key)
        {
            if (!v.is_array())
                throw ConfigError(key, "'" + key + "' must be an array of numbers.");
            std::vector<double> out;
            for (const auto &item : v)
            {
                if (!item.is_number())
                    throw ConfigError(key, "'" + key + "' must be an array of numbers.");
                out.push_back(item.get<double>());
            }
            return out;
        }
    }

    ConfigEntries config_entries_from_json(const json &body)
    {
        if (!body.is_object())
            throw ConfigError("", "Request body must be a JSON object.");
        ConfigEntries out;
        for (const auto &[section, content] : body.items())
        {
            if (!config_sections.contains(section))
                continue;
            if (!content.is_object())
                throw ConfigError(section, "'" + section + "' must be an object.");
            for (const auto &[name, value] : content.items())
            {
                const std::string key = section + "." + name;
                if (value.is_array())
                {
                    std::string text;
                    for (std::size_t i = 0; i < value.size(); ++i)
                        text += (i ? "," : "") + scalar_text(key, value[i]);
                    out[key] = text;
                }
                else
                    out[key] = scalar_text(key, value);
            }
        }
        return out;
    }

    json run_config_to_json(const RunConfig &run)
    {
        const ChannelConfig &c = run.channel;
        const Scenario &s = c.scenario;
        auto point = [](const Point3 &p) { return json::array({p.x, p.y, p.z}); };

        json scenario = {{"environment", to_string(s.environment)},
                         {"frequency_ghz", s.frequency_ghz},
                         {"wall", to_string(s.wall)},
                         {"tx", point(s.tx)},
                         {"rx", point(s.rx)},
                         {"ris", point(s.ris)},
                         {"elements", s.n_elements},
                         {"direct_link", s.direct_link_present}};
        if (s.element_spacing)
            scenario["element_spacing_m"] = *s.element_spacing;

        json simulation = {{"realizations", c.realizations},
                           {"seed", c.seed},
                           {"wavefront", to_string(c.wavefront)},
                           {"los_mode", to_string(c.los_mode)},
                           {"scattering", c.scattering},
                           {"shadowing", c.shadowing}};
        if (c.fixed_element_gain)
            simulation["element_gain"] = *c.fixed_element_gain;

        json rules = json::array();
        for (auto r : run.rules)
            rules.push_back(to_string(r));

        return {{"scenario", scenario},
                {"simulation", simulation},
                {"link",
                 {{"tx_power_dbw", run.tx_power_dbw},
                  {"noise_dbm", run.noise_dbm},
                  {"tx_gain", c.link.gt},
                  {"rx_gain", c.link.gr},
                  {"efficiency", c.link.efficiency},
                  {"rules", rules}}},
                {"pathloss",
                 {{"los_exponent", c.path_loss.los.exponent},
                  {"los_sigma_db", c.path_loss.los.sigma_db},
                  {"nlos_exponent", c.path_loss.nlos.exponent},
                  {"nlos_sigma_db", c.path_loss.nlos.sigma_db}}},
                {"clusters",
                 {{"mean_count", c.cluster_stats.mean_clusters},
                  {"max_subrays", c.cluster_stats.max_subrays},
                  {"azimuth_spread_deg", c.cluster_stats.azimuth_range_deg},
                  {"elevation_spread_deg", c.cluster_stats.elevation_range_deg},
                  {"subray_spread_deg", c.cluster_stats.subray_spread_deg}}}};
    }

    json rate_report_to_json(const RateReport &r)
    {
        // Non-finite SNR (all gains zero) serializes as null.
        return {{"mean_rate", r.mean_rate},
                {"rate_std", r.rate_std},
                {"rate_stderr", r.rate_stderr},
                {"mean_snr_db", std::isfinite(r.mean_snr_db) ? json(r.mean_snr_db) : json(nullptr)},
                {"count", r.count},
                {"tx_power_dbm", r.tx_power_dbm},
                {"noise_dbm", r.noise_dbm}};
    }

    struct Service::Job
    {
        std::atomic<std::size_t> done{0};
        std::size_t total = 0;
        std::atomic<bool> cancel{false};

        std::mutex m; // guards the fields below
        std::string state = "running";
        json result;
        json error;
        std::chrono::steady_clock::time_point finished;

        std::thread worker;
    };

    Service::Service(ServiceOptions opts) : opts_(opts) {}

    Service::~Service()
    {
        std::map<std::string, std::shared_ptr<Job>> jobs;
        {
            std::lock_guard lock(mutex_);
            jobs.swap(jobs_);
        }
        for (auto &[id, job] : jobs)
            job->cancel = true;
        for (auto &[id, job] : jobs)
            if (job->worker.joinable())
                job->worker.join();
    }

    ServiceResponse Service::validate(const std::string &body) const
    {
        return guarded([&]
                       {
                           const json j = parse_body(body);
                           check_top_level(j, {"profile_rule", "histogram_bins", "grid", "tx_power_dbw"});
                           const RunConfig run = parse_config(config_entries_from_json(j));
                           const auto violations = validate_scenario(run.channel.scenario);
                           return respond(200, {{"valid", violations.empty()},
                                                {"violations", violations_json(violations)},
                                                {"config", run_config_to_json(run)}}); });
    }

    ServiceResponse Service::simulate(const std::string &body) const
    {
        return guarded([&]
                       {
                           const json j = parse_body(body);
                           check_top_level(j, {"profile_rule", "histogram_bins"});
                           RunConfig run = run_from_body(j, opts_);
                           if (j.contains("profile_rule"))
                               run.rules = rules_from_json(j["profile_rule"]);
                           if (run.rules.empty())
                               throw ConfigError("profile_rule", "At least one phase rule is required.");
                           if (run.tx_power_dbw.empty())
                               throw ConfigError("link.tx_power_dbw", "At least one transmit power is required.");

                           std::size_t bins = 0;
                           if (j.contains("histogram_bins"))
                           {
                               const json &b = j["histogram_bins"];
                               if (!b.is_number_unsigned() || b.get<std::size_t>() > 1000)
                                   throw ConfigError("histogram_bins", "histogram_bins must be an integer in [0, 1000].");
                               bins = b.get<std::size_t>();
                           }

                           const auto gains = channel_gains(run.channel, run.rules, run.threads);
                           const double n0 = dbm_to_watts(run.noise_dbm);
                           json reports = json::array();
                           for (std::size_t k = 0; k < run.rules.size(); ++k)
                               for (double pt_dbw : run.tx_power_dbw)
                               {
                                   const double pt = db_to_linear(pt_dbw);
                                   json rep = rate_report_to_json(rate_from_gains(gains[k], pt, n0));
                                   rep["rule"] = to_string(run.rules[k]);
                                   rep["tx_power_dbw"] = pt_dbw;
                                   if (bins > 0)
                                       rep["histogram"] = histogram_json(gains[k], pt, n0, bins);
                                   reports.push_back(rep);
                               }

                           return respond(200, {{"config", run_config_to_json(run)},
                                                {"seed", run.channel.seed},
                                                {"seed_text", std::to_string(run.channel.seed)},
                                                {"violations", json::array()},
                                                {"reports", reports}}); });
    }

    ServiceResponse Service::start_heatmap(const std::string &body)
    {
        purge_expired();
        return guarded([&]
                       {
                           const json j = parse_body(body);
                           check_top_level(j, {"profile_rule", "grid", "tx_power_dbw"});
                           RunConfig run = run_from_body(j, opts_);

                           if (!j.contains("grid") || !j["grid"].is_object())
                               throw ConfigError("grid", "Missing 'grid' object with x and y arrays.");
                           const json &g = j["grid"];
                           RxGrid grid{number_array(g.value("x", json()), "grid.x"), number_array(g.value("y", json()), "grid.y")};
                           if (grid.x.empty() || grid.y.empty())
                               throw ConfigError("grid", "Grid axes must be nonempty.");
                           if (grid.x.size() > opts_.max_grid_side || grid.y.size() > opts_.max_grid_side)
                               throw ServiceError{400, "LIMIT_EXCEEDED",
                                                  "Grid exceeds the service cap of " + std::to_string(opts_.max_grid_side) +
                                                      " points per axis.",
                                                  "grid", {}};

                           ProfileRule rule = ProfileRule::Optimal;
                           if (j.contains("profile_rule"))
                           {
                               const auto rules = rules_from_json(j["profile_rule"]);
                               if (rules.size() != 1)
                                   throw ConfigError("profile_rule", "Heatmaps take a single profile_rule.");
                               rule = rules.front();
                           }
                           double pt_dbw = 0.0;
                           if (j.contains("tx_power_dbw"))
                           {
                               if (!j["tx_power_dbw"].is_number())
                                   throw ConfigError("tx_power_dbw", "tx_power_dbw must be a number.");
                               pt_dbw = j["tx_power_dbw"].get<double>();
                           }

                           // Reject invalid grid points now rather than inside the job.
                           for (std::size_t i = 0; i < grid.size(); ++i)
                           {
                               const ChannelConfig cell = heatmap_cell_config(run.channel, grid, i);
                               auto v = validate_scenario(cell.scenario);
                               if (!v.empty())
                               {
                                   for (auto &x : v)
                                       x.message += " (grid point x=" + format_number(cell.scenario.rx.x) +
                                                    ", y=" + format_number(cell.scenario.rx.y) + ")";
                                   throw ScenarioError("Invalid heatmap grid point.", std::move(v));
                               }
                           }
                           check_config(heatmap_cell_config(run.channel, grid, 0));

                           auto job = std::make_shared<Job>();
                           job->total = grid.size();
                           std::string id;
                           {
                               std::lock_guard lock(mutex_);
                               id = "hm-" + std::to_string(next_id_++);
                               jobs_[id] = job;
                           }

                           const json config = run_config_to_json(run);
                           const std::string rule_name(to_string(rule));
                           job->worker = std::thread([job, run, grid, rule, pt_dbw, config, rule_name]
                                                     {
                               try
                               {
                                   const Heatmap map = rate_heatmap(run.channel, grid, rule, db_to_linear(pt_dbw),
                                                                    dbm_to_watts(run.noise_dbm), run.threads,
                                                                    [&](std::size_t done, std::size_t)
                                                                    {
                                                                        job->done = done;
                                                                        if (job->cancel)
                                                                            throw Cancelled{};
                                                                    });
                                   json cells = json::array();
                                   const std::size_t nx = grid.x.size();
                                   for (std::size_t i = 0; i < map.cells.size(); ++i)
                                   {
                                       const auto &c = map.cells[i];
                                       cells.push_back({{"ix", i % nx},
                                                        {"iy", i / nx},
                                                        {"x", c.x},
                                                        {"y", c.y},
                                                        {"seed", c.seed},
                                                        {"seed_text", std::to_string(c.seed)},
                                                        {"report", rate_report_to_json(c.report)}});
                                   }
                                   std::lock_guard lock(job->m);
                                   job->result = {{"grid", {{"x", grid.x}, {"y", grid.y}}},
                                                  {"profile_rule", rule_name},
                                                  {"tx_power_dbw", pt_dbw},
                                                  {"config", config},
                                                  {"cells", cells}};
                                   job->state = "done";
                                   job->finished = std::chrono::steady_clock::now();
                               }
                               catch (const Cancelled &)
                               {
                                   std::lock_guard lock(job->m);
                                   job->state = "cancelled";
                                   job->finished = std::chrono::steady_clock::now();
                               }
                               catch (const std::exception &e)
                               {
                                   std::lock_guard lock(job->m);
                                   job->state = "failed";
                                   job->error = {{"code", "INTERNAL_ERROR"}, {"message", e.what()}, {"violations", json::array()}};
                                   job->finished = std::chrono::steady_clock::now();
                               } });

                           return respond(202, {{"job_id", id},
                                                {"status", "running"},
                                                {"progress", {{"done", 0}, {"total", grid.size()}}}}); });
    }

    ServiceResponse Service::heatmap_status(const std::string &id)
    {
        purge_expired();
        std::shared_ptr<Job> job;
        {
            std::lock_guard lock(mutex_);
            auto it = jobs_.find(id);
            if (it != jobs_.end())
                job = it->second;
        }
        if (!job)
            return error_response({404, "NOT_FOUND", "Unknown or expired heatmap job '" + id + "'.", "", {}});

        std::lock_guard lock(job->m);
        json body = {{"job_id", id},
                     {"status", job->state},
                     {"progress", {{"done", job->done.load()}, {"total", job->total}}}};
        if (job->state == "done")
            body["result"] = job->result;
        else if (job->state == "failed")
            body["error"] = job->error;
        return respond(200, body);
    }

    ServiceResponse Service::recommend(const std::string &environment, const std::string &wall) const
    {
        return guarded([&]
                       {
                           const auto env = parse_environment(environment);
                           if (!env)
                               throw ConfigError("environment", "environment must be inh or umi.");
                           const auto w = parse_wall(wall);
                           if (!w)
                               throw ConfigError("wall", "wall must be side or opposite.");
                           RunConfig run;
                           run.channel = ChannelConfig::for_scenario(recommend_positions(*env, *w));
                           return respond(200, {{"config", run_config_to_json(run)}}); });
    }

    ServiceResponse Service::schema() const
    {
        return {200, json::parse(service_schema_text()).dump()};
    }

    void Service::purge_expired()
    {
        const auto now = std::chrono::steady_clock::now();
        std::vector<std::shared_ptr<Job>> expired;
        {
            std::lock_guard lock(mutex_);
            for (auto it = jobs_.begin(); it != jobs_.end();)
            {
                bool drop = false;
                {
                    std::lock_guard job_lock(it->second->m);
                    drop = it->second->state != "running" && now - it->second->finished >= opts_.job_ttl;
                }
                if (drop)
                {
                    expired.push_back(it->second);
                    it = jobs_.erase(it);
                }
                else
                    ++it;
            }
        }
        for (auto &job : expired)
            if (job->worker.joinable())
                job->worker.join();
    }

    void Service::mount(httplib::Server &server)
    {
        auto send = [](httplib::Response &res, const ServiceResponse &r)
        {
            res.status = r.status;
            res.set_content(r.body, "application/json");
        };

        server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                    {"Access-Control-Allow-Headers", "Content-Type"},
                                    {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
        server.Options(R"(.*)", [](const httplib::Request &, httplib::Response &res) { res.status = 204; });
        server.Post("/validate", [this, send](const httplib::Request &req, httplib::Response &res)
                    { send(res, validate(req.body)); });
        server.Post("/simulate", [this, send](const httplib::Request &req, httplib::Response &res)
                    { send(res, simulate(req.body)); });
        server.Post("/heatmap", [this, send](const httplib::Request &req, httplib::Response &res)
                    { send(res, start_heatmap(req.body)); });
        server.Get(R"(/heatmap/([A-Za-z0-9\-]+))", [this, send](const httplib::Request &req, httplib::Response &res)
                   { send(res, heatmap_status(req.matches[1])); });
        server.Get("/recommend", [this, send](const httplib::Request &req, httplib::Response &res)
                   { send(res, recommend(req.get_param_value("environment"), req.get_param_value("wall"))); });
        server.Get("/schema", [this, send](const httplib::Request &, httplib::Response &res) { send(res, schema()); });
        server.set_error_handler([send](const httplib::Request &req, httplib::Response &res)
                                 {
                                     if (!res.body.empty())
                                         return;
                                     const int status = res.status;
                                     send(res, error_response({status, status == 404 ? "NOT_FOUND" : "HTTP_ERROR",
                                                               "No route for " + req.method + " " + req.path + ".", "", {}})); });
    }
}
