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

#include "fdabeam/field.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fdabeam
{
    // Sampling axes of a pattern cube. Each axis is non-empty and strictly increasing.
    struct PatternGrid
    {
        std::vector<double> range_axis; // [m], >= 0
        std::vector<double> angle_axis; // [rad]
        std::vector<double> time_axis;  // [s]

        std::size_t n_range() const { return range_axis.size(); }
        std::size_t n_angle() const { return angle_axis.size(); }
        std::size_t n_time() const { return time_axis.size(); }
        std::size_t size() const { return n_range() * n_angle() * n_time(); }

        bool operator==(const PatternGrid &) const = default;
    };

    std::vector<Violation> validate(const PatternGrid &grid);

    // min, min + step, ... up to max (inclusive within 1e-9 of a step)
    std::vector<double> uniform_axis(double min, double max, double step);

    // Magnitudes indexed [range][angle][time], stored with time fastest
    struct PatternCube
    {
        PatternGrid grid;
        std::vector<double> magnitudes;
        std::string config_digest;

        std::size_t index(std::size_t i_range, std::size_t i_angle, std::size_t i_time) const
        {
            return (i_range * grid.n_angle() + i_angle) * grid.n_time() + i_time;
        }
        double at(std::size_t i_range, std::size_t i_angle, std::size_t i_time) const
        {
            return magnitudes[index(i_range, i_angle, i_time)];
        }

        // Magnitudes along the range axis at fixed (angle, time)
        std::vector<double> range_cut(std::size_t i_angle, std::size_t i_time) const;
        double max_magnitude() const;
    };

    struct ExecutionPolicy
    {
        int threads = 0; // 0 = OpenMP default
    };

    // OpenMP evaluation over grid points. Output is bit-identical to evaluate_cube_serial for any thread count.
    PatternCube evaluate_cube(const ArrayConfig &config, const PatternGrid &grid, DelayModel model,
                              const FieldOptions &options = {}, ExecutionPolicy policy = {});

    // Single-threaded reference implementation
    PatternCube evaluate_cube_serial(const ArrayConfig &config, const PatternGrid &grid, DelayModel model,
                                     const FieldOptions &options = {});

    // Number of threads a policy resolves to
    int resolve_threads(ExecutionPolicy policy);
}
