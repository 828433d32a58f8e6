// SPDX-License-Identifier: Apache-2.0
//
// fdabeam: instantaneous space-time beampatterns of linear antenna arrays
// Copyright (C) 2026 The fdabeam authors
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

#pragma once

#include "fdabeam/experiments.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fdabeam::scenario
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_invariant_violated = 1,
        exit_config_error = 2,
        exit_runtime_error = 3,
        exit_degenerate_probe = 4,
    };

    struct RunOptions
    {
        std::string prefix; // output path prefix; files are <prefix>_<name>
        ExecutionPolicy policy;
    };

    struct OutputFile
    {
        std::string name; // suffix appended to the prefix
        std::string content;
    };

    // Writes the files plus <prefix>_manifest.json listing each with its size and FNV-1a 64 checksum
    void write_run(const std::string &prefix, const std::string &command, const Scenario &scenario,
                   std::vector<OutputFile> files, const nlohmann::json &extra = nlohmann::json::object());

    std::string cube_csv(const PatternCube &cube);

    // Each returns the process exit code; progress and summaries go to `log`
    int cmd_simulate(const Scenario &scenario, const RunOptions &run, std::ostream &log);
    int cmd_compare_fig1(const Scenario &scenario, const RunOptions &run, std::ostream &log);
    int cmd_check_invariance(const Scenario &scenario, const RunOptions &run, std::ostream &log);
    int cmd_track_peak(const Scenario &scenario, const RunOptions &run, std::ostream &log);
}
