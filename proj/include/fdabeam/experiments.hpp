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

#include "fdabeam/metrics.hpp"
#include "fdabeam/scenario.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fdabeam::scenario
{
    // ---- Fig. 1 style comparison: FDA vs pulsed phased arrays -------------------------------------------

    struct PatternSummary
    {
        std::string name;
        double peak_magnitude = 0.0;
        double fwhm = 0.0;                      // [m]
        std::optional<double> sidelobe_db;      // nullopt = no sidelobes
        double bce_fwhm_target = 0.0;           // centered range target of the Gaussian FWHM
        double bce_box = 0.0;                   // range x angle FWHM box
    };

    struct BceTable
    {
        std::vector<double> parameter;
        std::vector<double> fda, gaussian, rect; // NaN where undefined
    };

    struct Fig1Result
    {
        double t0 = 0.0;
        std::vector<double> range_axis;
        std::vector<double> fda, gaussian, rect; // cuts at broadside normalized to their peaks
        std::vector<PatternSummary> summary;     // fda, gaussian, rect
        double expected_gaussian_fwhm = 0.0;     // c * FDHM
        double box_range_width = 0.0, box_angle_width = 0.0;
        BceTable by_width, by_center, by_time;
    };

    Fig1Result run_compare_fig1(const Scenario &scenario, ExecutionPolicy policy = {});

    // ---- time-range invariance falsifier ----------------------------------------------------------------

    // Uniform real in [lo, hi) from the top 53 bits of a 64-bit draw; portable across standard libraries
    double uniform(std::mt19937_64 &rng, double lo, double hi);

    // Rounds to a multiple of 2^-bits
    double to_lattice(double value, int bits);

    // Seeded samples on binary lattices so that r + c dt and t + dt are exactly representable
    struct InvarianceDraw
    {
        std::vector<InvarianceSample> samples;
        std::vector<double> dts;
    };
    InvarianceDraw draw_invariance_samples(std::mt19937_64 &rng, const InvarianceSettings &settings);

    struct ProbeResult
    {
        double window = 0.0;   // [s]
        double swing_db = 0.0; // 20 log10(max / min) of |B| at the focus point
        double max_magnitude = 0.0, min_magnitude = 0.0;
    };

    // |B| at a fixed location over one offset period (or probe_window when no element is offset)
    ProbeResult fixed_point_probe(const ArrayConfig &config, DelayModel model, const FieldOptions &options,
                                  const InvarianceSettings &settings);

    struct InvarianceRun
    {
        InvarianceReport report;
        std::string criterion;      // "relative" or "near_field_budget"
        double checked_value = 0.0; // the deviation compared against the tolerance
        double tolerance = 0.0;
        bool shift_law_holds = false;
        bool offsets_nonzero = false;
        ProbeResult probe;
        int exit_code = 0; // 0 ok, 1 shift law violated, 4 degenerate probe
    };

    InvarianceRun run_check_invariance(const Scenario &scenario, ExecutionPolicy policy = {});

    // ---- peak tracking ----------------------------------------------------------------------------------

    struct SweepRow
    {
        double duration = 0.0;
        double angle_drift = 0.0; // [rad]
        double first_angle = 0.0, last_angle = 0.0;
    };

    struct TrackRun
    {
        PeakTrack track;
        std::vector<SweepRow> sweep;
    };

    TrackRun run_track_peak(const Scenario &scenario, ExecutionPolicy policy = {});
    std::vector<SweepRow> run_duration_sweep(const Scenario &scenario, ExecutionPolicy policy = {});
}
