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

#include "fdabeam/constants.hpp"
#include "fdabeam/field.hpp"
#include "fdabeam/pattern.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdabeam::scenario
{
    inline constexpr const char *schema_id = "fdabeam.scenario/1";
    inline constexpr const char *tool_version = "1.0.0";

    // Configuration could not be parsed or validated; carries one diagnostic per offending field
    class ConfigError : public std::runtime_error
    {
    public:
        explicit ConfigError(std::vector<std::string> diagnostics);
        const std::vector<std::string> &diagnostics() const noexcept { return diagnostics_; }

    private:
        std::vector<std::string> diagnostics_;
    };

    struct Fig1Settings
    {
        double fdhm = 16.7e-6;          // Gaussian pulse [s]
        double rect_duration = 16.7e-6; // rectangular pulse [s]
        double window_center = 20000.0; // [m]
        double window_width = 30000.0;  // [m]
        double range_step = 5.0;        // [m]
        double box_range_step = 20.0;   // range-angle cubes [m]
        double box_angle_step = deg_to_rad(0.5);
        std::vector<double> bce_widths;       // centered target widths [m]
        double bce_fixed_width = 5000.0;      // width for the center and time sweeps [m]
        double bce_center_step = 500.0;       // [m]
        std::vector<double> bce_time_offsets; // relative to t0 [s]
    };

    struct InvarianceSettings
    {
        std::size_t sample_count = 1000;
        std::size_t dt_count = 4;
        double range_min = 10000.0, range_max = 20000.0;             // [m]
        double angle_min = deg_to_rad(-60.0), angle_max = deg_to_rad(60.0);
        double time_min = 0.0, time_max = 1e-4;                      // [s]
        double dt_max = 2e-5;                                        // |dt| bound [s]
        double tolerance = 1e-12;                                    // far-field relative deviation
        double focus_range = 10000.0;                                // fixed-location probe [m]
        double focus_angle = 0.0;                                    // [rad]
        std::size_t probe_samples = 1024;
        double probe_window = 1e-4; // probe span when no element has a frequency offset [s]
        double swing_threshold_db = 3.0;
    };

    struct SweepSettings
    {
        bool enabled = false;
        std::vector<double> durations; // switch on-time per pulse [s]
        double duty = 0.1;
        double delta_f = 1e4;          // [Hz]
        double observe_range = 10000.0; // [m]
        std::vector<double> angle_axis; // [rad]
        std::size_t samples_per_pulse = 21;
    };

    struct TrackSettings
    {
        PatternGrid grid;
        SweepSettings sweep;
    };

    struct Scenario
    {
        ArrayConfig array;
        FieldOptions options;
        DelayModel model = DelayModel::FarField;
        PatternGrid grid;
        std::uint64_t seed = 1;
        std::string output_prefix = "fdabeam";
        Fig1Settings fig1;
        InvarianceSettings invariance;
        TrackSettings track;

        // Fully expanded configuration (shorthand constructors resolved) as recorded in manifests
        nlohmann::json expanded;
    };

    // Default scenario: 19-element CW FDA, f0 = 10 GHz, d = lambda/2, dF = 10 kHz, far field
    Scenario default_scenario();

    Scenario parse_scenario(const nlohmann::json &doc);

    // Reads and parses a scenario file; JSON syntax errors are reported with line and column
    Scenario load_scenario(const std::filesystem::path &path);

    // Re-expands after programmatic edits (model or seed overrides)
    void refresh_expanded(Scenario &scenario);

    nlohmann::json envelope_to_json(const EnvelopeSpec &envelope);
    nlohmann::json array_to_json(const ArrayConfig &config);
}
