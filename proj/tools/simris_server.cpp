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

#include <CLI11.hpp>
#include <httplib.h>

#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"HTTP service for the simris channel simulator", "simris-server"};
    std::string listen = "127.0.0.1:8080";
    simris::ServiceOptions opts;
    long ttl_s = 600;
    bool print_schema = false;
    app.add_option("--listen", listen, "HOST:PORT to bind");
    app.add_option("--threads", opts.threads, "Worker threads per request (0 = all cores)");
    app.add_option("--max-realizations", opts.max_realizations, "Realization cap per request");
    app.add_option("--max-grid", opts.max_grid_side, "Heatmap points per axis cap");
    app.add_option("--job-ttl", ttl_s, "Seconds a finished heatmap job is kept");
    app.add_flag("--print-schema", print_schema, "Print the JSON schema and exit");
    CLI11_PARSE(app, argc, argv);
    opts.job_ttl = std::chrono::seconds(ttl_s);

    if (print_schema)
    {
        std::cout << simris::service_schema_text();
        return 0;
    }

    const auto colon = listen.rfind(':');
    if (colon == std::string::npos)
    {
        std::cerr << "--listen expects HOST:PORT\n";
        return 2;
    }
    const std::string host = listen.substr(0, colon);
    int port = 0;
    try
    {
        port = std::stoi(listen.substr(colon + 1));
    }
    catch (const std::exception &)
    {
        std::cerr << "--listen expects HOST:PORT\n";
        return 2;
    }

    simris::Service service(opts);
    httplib::Server server;
    service.mount(server);
    std::cerr << "simris-server listening on " << host << ":" << port << "\n";
    if (!server.listen(host, port))
    {
        std::cerr << "cannot bind " << listen << "\n";
        return 4;
    }
    return 0;
}
