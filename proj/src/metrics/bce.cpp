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

namespace fdabeam
{
    std::vector<double> axis_weights(std::span<const double> axis, double lo, double hi)
    {
        std::vector<double> w(axis.size(), 0.0);
        if (axis.empty())
            return w;
        if (axis.size() == 1)
        {
            w[0] = (axis[0] >= lo && axis[0] <= hi) ? 1.0 : 0.0;
            return w;
        }
        const double a = std::max(lo, axis.front());
        const double b = std::min(hi, axis.back());
        if (!(a < b))
            return w;

        for (std::size_t k = 0; k + 1 < axis.size(); ++k)
        {
            const double x0 = axis[k], x1 = axis[k + 1];
            const double p = std::max(a, x0), q = std::min(b, x1);
            if (!(p < q))
                continue;
            const double h = x1 - x0;
            if (p == x0 && q == x1)
            {
                w[k] += 0.5 * h;
                w[k + 1] += 0.5 * h;
                continue;
            }
            w[k] += ((x1 - p) * (x1 - p) - (x1 - q) * (x1 - q)) / (2.0 * h);
            w[k + 1] += ((q - x0) * (q - x0) - (p - x0) * (p - x0)) / (2.0 * h);
        }
        return w;
    }

    namespace
    {
        bool intersects(const std::vector<double> &axis, double lo, double hi)
        {
            return !(hi < axis.front() || lo > axis.back());
        }
    }

    double bce(const PatternCube &cube, std::size_t time_index, const RegionSpec &target, BceOptions options)
    {
        const auto &grid = cube.grid;
        if (time_index >= grid.n_time())
            throw ValidationError("time_index", "time_index out of range");
        if (!(target.range_min <= target.range_max) || !(target.angle_min <= target.angle_max))
            throw ValidationError("target", "interval lower bound must not exceed upper bound");
        if (!intersects(grid.range_axis, target.range_min, target.range_max) ||
            !intersects(grid.angle_axis, target.angle_min, target.angle_max))
            throw MeasurementError("BCE target region does not intersect the grid");

        auto wr = axis_weights(grid.range_axis, target.range_min, target.range_max);
        const auto wa = axis_weights(grid.angle_axis, target.angle_min, target.angle_max);
        auto wr_all = axis_weights(grid.range_axis, grid.range_axis.front(), grid.range_axis.back());
        const auto wa_all = axis_weights(grid.angle_axis, grid.angle_axis.front(), grid.angle_axis.back());
        if (options.polar_jacobian)
            for (std::size_t i = 0; i < wr.size(); ++i)
            {
                wr[i] *= grid.range_axis[i];
                wr_all[i] *= grid.range_axis[i];
            }

        double inside = 0.0, total = 0.0;
        for (std::size_t i = 0; i < grid.n_range(); ++i)
            for (std::size_t j = 0; j < grid.n_angle(); ++j)
            {
                const double m = cube.at(i, j, time_index);
                const double energy = m * m;
                inside += wr[i] * wa[j] * energy;
                total += wr_all[i] * wa_all[j] * energy;
            }
        if (!(total > 0.0))
            throw MeasurementError("BCE undefined: pattern slice carries no energy");
        return std::clamp(inside / total, 0.0, 1.0);
    }
}
