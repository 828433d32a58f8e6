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

#include "fdabeam/pattern.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fdabeam
{
    // Closed (range, angle) box used as a beam collection target
    struct RegionSpec
    {
        double range_min = 0.0, range_max = 0.0; // [m]
        double angle_min = 0.0, angle_max = 0.0; // [rad]
    };

    struct BceOptions
    {
        bool polar_jacobian = false; // weight by r (r dr dtheta)
    };

    // Beam collection efficiency of the slice at time_index: energy of |B|^2 inside the target over the whole
    // grid slice, integrating the piecewise-linear interpolant of |B|^2 over each axis.
    double bce(const PatternCube &cube, std::size_t time_index, const RegionSpec &target, BceOptions options = {});

    // Integration weights of the hat functions of `axis` over [lo, hi]. An axis with a single sample has unit
    // weight when the sample lies in the interval.
    std::vector<double> axis_weights(std::span<const double> axis, double lo, double hi);

    // Full width at half maximum of a sampled cut, crossings located by linear interpolation.
    // Throws MeasurementError for a boundary peak or a missing crossing.
    double fwhm(std::span<const double> axis, std::span<const double> values);
    double fwhm_range(const PatternCube &cube, std::size_t angle_index, std::size_t time_index);

    // Highest local maximum outside the main lobe relative to the peak [dB]; nullopt when there is none.
    std::optional<double> sidelobe_level(std::span<const double> values);
    std::optional<double> sidelobe_level(const PatternCube &cube, std::size_t angle_index, std::size_t time_index);

    struct PeakSample
    {
        double time = 0.0;
        double range = 0.0;
        double angle = 0.0;
        double magnitude = 0.0;
    };

    struct PeakTrack
    {
        std::vector<PeakSample> samples;
        double fitted_speed = 0.0; // least-squares slope of peak range against time [m/s]
        double angle_drift = 0.0;  // max |angle - median angle| [rad]
        bool degenerate = false;   // some time slice was flat; its "peak" is the first sample
    };

    // Argmax per time slice (ties: smallest range, then smallest angle). Throws MeasurementError when a peak
    // sits on the boundary of an axis with more than one sample.
    PeakTrack track_peak(const PatternCube &cube);
    PeakTrack track_peak(const ArrayConfig &config, const PatternGrid &grid, DelayModel model,
                         const FieldOptions &options = {}, ExecutionPolicy policy = {});

    // Least-squares slope of y against x
    double fit_slope(std::span<const double> x, std::span<const double> y);

    struct InvarianceSample
    {
        ObservationPoint point;
        double time = 0.0;
    };

    struct InvarianceReport
    {
        double max_relative_deviation = 0.0;
        // max | |B'| - |B| | / sum of amplitudes; well defined at nulls
        double max_peak_normalized_deviation = 0.0;
        InvarianceSample witness;
        double witness_dt = 0.0;
        std::size_t samples_checked = 0;
    };

    inline constexpr double relative_deviation_floor = 1e-30;

    // Compares |B(r + c dt, theta, t + dt)| with |B(r, theta, t)| for every sample and dt
    InvarianceReport check_time_range_invariance(const ArrayConfig &config, std::span<const InvarianceSample> samples,
                                                 std::span<const double> dt_list, DelayModel model,
                                                 const FieldOptions &options = {}, ExecutionPolicy policy = {});

    // First-order bound on the peak-normalized shift-law deviation under ExactSpherical for observation ranges
    // >= min_range. Envelope jumps (rect, switch) are not covered.
    double near_field_budget(const ArrayConfig &config, double min_range, const FieldOptions &options = {});

    struct PatternDifference
    {
        double max_abs_diff = 0.0;
        double rms_diff = 0.0;
    };

    PatternDifference compare_patterns(const PatternCube &a, const PatternCube &b);
    PatternDifference compare_values(std::span<const double> a, std::span<const double> b);
}
