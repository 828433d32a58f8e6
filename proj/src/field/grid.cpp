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

#include "fdabeam/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fdabeam
{
    namespace
    {
        void check_axis(const std::vector<double> &axis, const std::string &name, std::vector<Violation> &out)
        {
            if (axis.empty())
            {
                out.push_back({name, "axis must be non-empty"});
                return;
            }
            for (std::size_t i = 0; i < axis.size(); ++i)
            {
                if (!std::isfinite(axis[i]))
                {
                    out.push_back({name + "[" + std::to_string(i) + "]", "axis values must be finite"});
                    return;
                }
                if (i > 0 && !(axis[i] > axis[i - 1]))
                {
                    out.push_back({name + "[" + std::to_string(i) + "]", "axis must be strictly increasing"});
                    return;
                }
            }
        }
    }

    std::vector<Violation> validate(const PatternGrid &grid)
    {
        std::vector<Violation> out;
        check_axis(grid.range_axis, "range_axis", out);
        check_axis(grid.angle_axis, "angle_axis", out);
        check_axis(grid.time_axis, "time_axis", out);
        if (!grid.range_axis.empty() && grid.range_axis.front() < 0.0)
            out.push_back({"range_axis", "ranges must be >= 0"});
        return out;
    }

    std::vector<double> uniform_axis(double min, double max, double step)
    {
        if (!(std::isfinite(min) && std::isfinite(max) && std::isfinite(step)))
            throw ValidationError("axis", "min, max and step must be finite");
        if (!(step > 0.0))
            throw ValidationError("axis.step", "step must be > 0");
        if (max < min)
            throw ValidationError("axis.max", "max must be >= min");
        const double span = (max - min) / step;
        const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        std::vector<double> axis(count);
        for (std::size_t i = 0; i < count; ++i)
            axis[i] = min + static_cast<double>(i) * step;
        return axis;
    }

    std::vector<double> PatternCube::range_cut(std::size_t i_angle, std::size_t i_time) const
    {
        std::vector<double> cut(grid.n_range());
        for (std::size_t i = 0; i < cut.size(); ++i)
            cut[i] = at(i, i_angle, i_time);
        return cut;
    }

    double PatternCube::max_magnitude() const
    {
        return magnitudes.empty() ? 0.0 : *std::max_element(magnitudes.begin(), magnitudes.end());
    }
}
