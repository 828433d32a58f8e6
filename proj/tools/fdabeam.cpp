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

// fdabeam command line: simulate | compare-fig1 | check-invariance | track-peak

#include "fdabeam/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace sc = fdabeam::scenario;

int main(int argc, char **argv)
{
    CLI::App app{"Instantaneous space-time beampatterns of linear antenna arrays"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_prefix;
    std::uint64_t seed = 0;
    std::string model;
    int threads = 0;

    auto add_common = [&](CLI::App *cmd)
    {
        cmd->add_option("--config", config_path, "Scenario JSON file (defaults built in when omitted)");
        cmd->add_option("--out", out_prefix, "Output path prefix; files are <prefix>_<name>");
        cmd->add_option("--seed", seed, "Random seed override");
        cmd->add_option("--model", model, "Delay model override")->check(CLI::IsMember({"farfield", "exact"}));
        cmd->add_option("--threads", threads, "Worker threads, 0 = auto (never changes output bytes)")
            ->check(CLI::NonNegativeNumber);
    };

    auto *simulate = app.add_subcommand("simulate", "Evaluate the pattern cube and write it as CSV");
    auto *fig1 = app.add_subcommand("compare-fig1", "FDA vs Gaussian/rect pulsed phased arrays: cuts, FWHM, sidelobes, BCE");
    auto *invariance = app.add_subcommand("check-invariance", "Time-range shift law falsifier and fixed-point probe");
    auto *track = app.add_subcommand("track-peak", "Track the pattern peak over time and fit its speed");
    for (auto *cmd : {simulate, fig1, invariance, track})
        add_common(cmd);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : sc::exit_config_error;
    }

    try
    {
        sc::Scenario scenario = config_path.empty() ? sc::default_scenario() : sc::load_scenario(config_path);
        bool changed = false;
        if (!model.empty())
        {
            scenario.model = model == "exact" ? fdabeam::DelayModel::ExactSpherical : fdabeam::DelayModel::FarField;
            changed = true;
        }
        for (auto *cmd : {simulate, fig1, invariance, track})
            if (cmd->parsed() && cmd->count("--seed"))
            {
                scenario.seed = seed;
                changed = true;
            }
        if (changed)
            sc::refresh_expanded(scenario);

        sc::RunOptions run{out_prefix.empty() ? scenario.output_prefix : out_prefix, {threads}};
        if (simulate->parsed())
            return sc::cmd_simulate(scenario, run, std::cout);
        if (fig1->parsed())
            return sc::cmd_compare_fig1(scenario, run, std::cout);
        if (invariance->parsed())
            return sc::cmd_check_invariance(scenario, run, std::cout);
        return sc::cmd_track_peak(scenario, run, std::cout);
    }
    catch (const sc::ConfigError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return sc::exit_config_error;
    }
    catch (const fdabeam::ValidationError &e)
    {
        std::cerr << "error: invalid input: " << e.what() << '\n';
        return sc::exit_config_error;
    }
    catch (const fdabeam::MeasurementError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return sc::exit_runtime_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return sc::exit_runtime_error;
    }
}
