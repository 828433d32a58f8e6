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

#include "fdabeam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fdabeam
{
    namespace
    {
        std::size_t checked_peak(std::span<const double> values)
        {
            if (values.size() < 3)
                throw MeasurementError("cut needs at least 3 samples");
            const auto peak = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
            if (!(values[peak] > 0.0))
                throw MeasurementError("cut is identically zero");
            if (peak == 0 || peak + 1 == values.size())
                throw MeasurementError("peak at grid boundary; widen the window");
            return peak;
        }

        double crossing(std::span<const double> axis, std::span<const double> values, std::size_t lo, double level)
        {
            const double t = (level - values[lo]) / (values[lo + 1] - values[lo]);
            return axis[lo] + t * (axis[lo + 1] - axis[lo]);
        }
    }

    double fwhm(std::span<const double> axis, std::span<const double> values)
    {
        if (axis.size() != values.size())
            throw ValidationError("values", "axis and values differ in length");
        const std::size_t peak = checked_peak(values);
        const double half = 0.5 * values[peak];

        std::size_t left = peak;
        while (left > 0 && values[left - 1] >= half)
            --left;
        if (left == 0)
            throw MeasurementError("no half-maximum crossing below the peak; widen the window");
        std::size_t right = peak;
        while (right + 1 < values.size() && values[right + 1] >= half)
            ++right;
        if (right + 1 == values.size())
            throw MeasurementError("no half-maximum crossing above the peak; widen the window");

        return crossing(axis, values, right, half) - crossing(axis, values, left - 1, half);
    }

    double fwhm_range(const PatternCube &cube, std::size_t angle_index, std::size_t time_index)
    {
        if (angle_index >= cube.grid.n_angle() || time_index >= cube.grid.n_time())
            throw ValidationError("index", "angle or time index out of range");
        const auto cut = cube.range_cut(angle_index, time_index);
        return fwhm(cube.grid.range_axis, cut);
    }

    std::optional<double> sidelobe_level(std::span<const double> values)
    {
        if (!values.empty() && std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; }))
            return std::nullopt;
        const std::size_t peak = checked_peak(values);

        // main lobe extends to the first local minimum on each side
        std::size_t left = peak, right = peak;
        while (left > 0 && values[left - 1] <= values[left])
            --left;
        while (right + 1 < values.size() && values[right + 1] <= values[right])
            ++right;

        double highest = 0.0;
        for (std::size_t i = 1; i + 1 < values.size(); ++i)
        {
            if (i >= left && i <= right)
                continue;
            if (values[i] > values[i - 1] && values[i] >= values[i + 1])
                highest = std::max(highest, values[i]);
        }
        if (highest == 0.0)
            return std::nullopt;
        return 20.0 * std::log10(highest / values[peak]);
    }

    std::optional<double> sidelobe_level(const PatternCube &cube, std::size_t angle_index, std::size_t time_index)
    {
        if (angle_index >= cube.grid.n_angle() || time_index >= cube.grid.n_time())
            throw ValidationError("index", "angle or time index out of range");
        return sidelobe_level(cube.range_cut(angle_index, time_index));
    }

    PatternDifference compare_values(std::span<const double> a, std::span<const double> b)
    {
        if (a.size() != b.size())
            throw ValidationError("values", "pattern sizes differ");
        PatternDifference d;
        double sq = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            const double diff = std::abs(a[i] - b[i]);
            d.max_abs_diff = std::max(d.max_abs_diff, diff);
            sq += diff * diff;
        }
        d.rms_diff = a.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(a.size()));
        return d;
    }

    PatternDifference compare_patterns(const PatternCube &a, const PatternCube &b)
    {
        if (!(a.grid == b.grid))
            throw ValidationError("grid", "pattern grids differ");
        return compare_values(a.magnitudes, b.magnitudes);
    }
}
