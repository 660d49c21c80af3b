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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace simris;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    Run cli(const std::vector<std::string> &args, std::optional<std::string> env_seed = std::nullopt)
    {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err, env_seed);
        return {code, out.str(), err.str()};
    }

    std::string source_path(const std::string &rel) { return (fs::path(SIMRIS_SOURCE_DIR) / rel).string(); }

    std::string read_text(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::vector<std::string> split(const std::string &line)
    {
        std::vector<std::string> out;
        std::stringstream s(line);
        for (std::string f; std::getline(s, f, ',');)
            out.push_back(f);
        return out;
    }

    const std::vector<std::string> indoor_flags = {"--env", "inh", "--freq", "28", "--wall", "side",
                                                   "--tx", "0,25,2", "--rx", "38,48,1", "--ris", "40,50,2"};

    std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string> &tail)
    {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    }

    std::string seed_line(const std::string &out)
    {
        const auto p = out.find("# seed=");
        return p == std::string::npos ? "" : out.substr(p, out.find('\n', p) - p);
    }
}

TEST_CASE("validate reports OK or the violations")
{
    const Run ok = cli(with({"validate"}, indoor_flags));
    CHECK(ok.code == exit_code::ok);
    CHECK(ok.out == "OK\n");

    auto bad_flags = indoor_flags;
    bad_flags[9] = "38,48,2.5";
    const Run bad = cli(with({"validate"}, bad_flags));
    CHECK(bad.code == exit_code::violations);
    CHECK(bad.out.rfind("RX_TOO_HIGH\t", 0) == 0);

    CHECK(cli({"validate", "--config", source_path("configs/inh_side_wall.ini")}).code == exit_code::ok);
}

TEST_CASE("exit codes")
{
    CHECK(cli({}).code == exit_code::config_error);
    CHECK(cli({"rate", "--bogus"}).code == exit_code::config_error);
    CHECK(cli({"rate", "--env", "inh"}).code == exit_code::config_error);
    CHECK(cli(with({"rate", "--realizations", "zero"}, indoor_flags)).code == exit_code::config_error);
    CHECK(cli({"rate", "--config", "/nonexistent/simris.ini"}).code == exit_code::io_error);

    auto bad_flags = indoor_flags;
    bad_flags[9] = "38,48,2.5";
    const Run viol = cli(with({"rate", "--realizations", "2"}, bad_flags));
    CHECK(viol.code == exit_code::violations);
    CHECK(viol.err.find("RX_TOO_HIGH") != std::string::npos);

    const Run unwritable = cli(with({"simulate", "--realizations", "1", "--out", "/nonexistent/dir/x.csv"}, indoor_flags));
    CHECK(unwritable.code == exit_code::io_error);

    CHECK(cli({"--help"}).code == exit_code::ok);
}

TEST_CASE("seed precedence: defaults, SIMRIS_SEED, flags, config file")
{
    const auto base = with({"rate", "--realizations", "2", "--elements", "16"}, indoor_flags);
    CHECK(seed_line(cli(base).out) == "# seed=0");
    CHECK(seed_line(cli(base, "5").out) == "# seed=5");
    CHECK(seed_line(cli(with(base, {"--seed", "7"}), "5").out) == "# seed=7");

    const fs::path dir = fs::temp_directory_path() / "simris_cli_seed";
    fs::create_directories(dir);
    const fs::path ini = dir / "seed.ini";
    std::ofstream(ini) << "[simulation]\nseed=11\n";
    CHECK(seed_line(cli(with(base, {"--seed", "7", "--config", ini.string()}), "5").out) == "# seed=11");
    CHECK(cli(base, "not-a-number").code == exit_code::config_error);
    fs::remove_all(dir);
}

TEST_CASE("config file keys override flags")
{
    const Run r = cli({"rate", "--realizations", "3", "--config", source_path("configs/inh_side_wall.ini"), "--pt", "0",
                       "--rules", "off"});
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out.find("# realizations=1000") != std::string::npos);
    CHECK(r.out.find("\noptimal,10,") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical")
{
    const auto args = with({"rate", "--realizations", "50", "--seed", "3"}, indoor_flags);
    const Run a = cli(args), b = cli(with(args, {"--threads", "1"}));
    REQUIRE(a.code == exit_code::ok);
    CHECK(a.out == b.out);

    const auto sim = with({"simulate", "--realizations", "20", "--elements", "16", "--seed", "3"}, indoor_flags);
    CHECK(cli(sim).out == cli(with(sim, {"--threads", "3"})).out);
}

TEST_CASE("simulate writes binary dumps to a file")
{
    const fs::path dir = fs::temp_directory_path() / "simris_cli_dump";
    fs::create_directories(dir);
    const fs::path out = dir / "dump.bin";
    const Run r = cli(with({"simulate", "--realizations", "4", "--elements", "16", "--seed", "9", "--format", "binary",
                            "--out", out.string()},
                           indoor_flags));
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out.empty());
    std::ifstream in(out, std::ios::binary);
    const ChannelDump d = read_channel_dump(in);
    CHECK(d.n_elements == 16);
    CHECK(d.realizations == 4);
    CHECK(d.seed == 9);
    fs::remove_all(dir);
}

TEST_CASE("heatmap command")
{
    const Run r = cli({"heatmap", "--config", source_path("configs/umi_heatmap.ini"), "--grid-x", "30,70",
                       "--grid-y", "40", "--realizations", "5"});
    REQUIRE(r.code == exit_code::ok);
    const auto header = r.out.find("ix,iy,x,y,seed,mean_rate");
    REQUIRE(header != std::string::npos);
    std::istringstream rows(r.out.substr(header));
    std::string line;
    std::getline(rows, line);
    std::size_t n = 0;
    while (std::getline(rows, line))
        ++n;
    CHECK(n == 25);

    CHECK(cli(with({"heatmap", "--realizations", "2"}, indoor_flags)).code == exit_code::config_error);
}

TEST_CASE("recommend prints a valid config")
{
    for (const char *env : {"inh", "umi"})
        for (const char *wall : {"side", "opposite"})
        {
            const Run r = cli({"recommend", "--env", env, "--wall", wall});
            REQUIRE(r.code == exit_code::ok);
            const RunConfig c = parse_config(r.out);
            CHECK(validate_scenario(c.channel.scenario).empty());
        }
    CHECK(cli({"recommend", "--env", "moon"}).code == exit_code::config_error);
}

TEST_CASE("sample rate table matches the stored reference")
{
    const Run r = cli({"rate", "--config", source_path("configs/inh_side_wall.ini")});
    REQUIRE(r.code == exit_code::ok);
    const std::string golden = read_text(fs::path(SIMRIS_TEST_DATA) / "inh_side_wall_rate.csv");
    std::istringstream got(r.out), want(golden);
    std::string a, b;
    std::size_t rows = 0;
    while (std::getline(want, b))
    {
        REQUIRE(std::getline(got, a));
        if (b.empty() || b[0] == '#' || b.rfind("rule,", 0) == 0)
        {
            CHECK(a == b);
            continue;
        }
        const auto fa = split(a), fb = split(b);
        REQUIRE(fa.size() == fb.size());
        CHECK(fa[0] == fb[0]);
        for (std::size_t i = 1; i < fb.size(); ++i)
        {
            const double x = std::stod(fa[i]), y = std::stod(fb[i]);
            CHECK(std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)));
        }
        ++rows;
    }
    CHECK_FALSE(std::getline(got, a));
    CHECK(rows == 21);
}
