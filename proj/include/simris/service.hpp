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

#ifndef SIMRIS_SERVICE_HPP
#define SIMRIS_SERVICE_HPP

#include "simris/config.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

namespace httplib
{
    class Server;
}

namespace simris
{
    inline constexpr const char *service_schema_version = "1.0";

    struct ServiceResponse
    {
        int status = 200;
        std::string body; // JSON

        nlohmann::json json() const { return nlohmann::json::parse(body); }
    };

    struct ServiceOptions
    {
        std::size_t max_realizations = 10000;
        std::size_t max_grid_side = 64; // per axis
        std::chrono::seconds job_ttl{600};
        unsigned threads = 0;
    };

    // JSON request bodies mirror the INI sections: "scenario", "simulation",
    // "link", "pathloss", "clusters". Coordinates are [x, y, z] arrays.
    // Returns the entries parse_config() understands.
    ConfigEntries config_entries_from_json(const nlohmann::json &body);

    nlohmann::json run_config_to_json(const RunConfig &run);
    nlohmann::json rate_report_to_json(const RateReport &r);

    // JSON Schema of every request and response body.
    const std::string &service_schema_text();

    // Endpoint logic, callable without a socket. Every body carries
    // "schema_version"; failures are {"error": {code, message, key?, violations}}.
    class Service
    {
    public:
        explicit Service(ServiceOptions opts = {});
        ~Service();
        Service(const Service &) = delete;
        Service &operator=(const Service &) = delete;

        ServiceResponse validate(const std::string &body) const;         // POST /validate
        ServiceResponse simulate(const std::string &body) const;         // POST /simulate
        ServiceResponse start_heatmap(const std::string &body);          // POST /heatmap
        ServiceResponse heatmap_status(const std::string &id);           // GET /heatmap/{id}
        ServiceResponse recommend(const std::string &environment, const std::string &wall) const; // GET /recommend
        ServiceResponse schema() const;                                  // GET /schema

        // Registers the routes above on `server`.
        void mount(httplib::Server &server);

        const ServiceOptions &options() const { return opts_; }

    private:
        struct Job;

        void purge_expired();

        ServiceOptions opts_;
        std::mutex mutex_; // guards jobs_ and next_id_
        std::map<std::string, std::shared_ptr<Job>> jobs_;
        std::uint64_t next_id_ = 1;
    };
}

#endif
