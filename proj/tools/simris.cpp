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

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv)
{
    std::optional<std::string> env_seed;
    if (const char *s = std::getenv("SIMRIS_SEED"))
        env_seed = s;
    const std::vector<std::string> args(argv + 1, argv + argc);
    return simris::run_cli(args, std::cout, std::cerr, env_seed);
}
