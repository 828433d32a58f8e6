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
    double fit_slope(std::span<const double> x, std::span<const double> y)
    {
        if (x.size() != y.size() || x.size() < 2)
            throw ValidationError("samples", "slope fit needs >= 2 paired samples");
        // work on offsets from the first sample so constant data gives exactly zero
        const double n = static_cast<double>(x.size());
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            mx += x[i] - x[0];
            my += y[i] - y[0];
        }
        mx /= n;
        my /= n;
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            const double dx = (x[i] - x[0]) - mx;
            sxy += dx * ((y[i] - y[0]) - my);
            sxx += dx * dx;
        }
        if (!(sxx > 0.0))
            throw ValidationError("samples", "slope fit needs distinct abscissae");
        return sxy / sxx;
    }

    PeakTrack track_peak(const PatternCube &cube)
    {
        const auto &grid = cube.grid;
        if (grid.n_time() < 2)
            throw ValidationError("time_axis", "peak tracking needs >= 2 time samples");

        PeakTrack track;
        for (std::size_t k = 0; k < grid.n_time(); ++k)
        {
            std::size_t best_i = 0, best_j = 0;
            double best = cube.at(0, 0, k), lowest = best;
            for (std::size_t i = 0; i < grid.n_range(); ++i)
                for (std::size_t j = 0; j < grid.n_angle(); ++j)
                {
                    const double m = cube.at(i, j, k);
                    lowest = std::min(lowest, m);
                    if (m > best)
                    {
                        best = m;
                        best_i = i;
                        best_j = j;
                    }
                }

            if (best == lowest)
                track.degenerate = true;
            else
            {
                if (grid.n_range() > 1 && (best_i == 0 || best_i + 1 == grid.n_range()))
                    throw MeasurementError("peak at range boundary of the grid; widen the range window");
                if (grid.n_angle() > 1 && (best_j == 0 || best_j + 1 == grid.n_angle()))
                    throw MeasurementError("peak at angle boundary of the grid; widen the angle window");
            }
            track.samples.push_back({grid.time_axis[k], grid.range_axis[best_i], grid.angle_axis[best_j], best});
        }

        std::vector<double> t, r, a;
        for (const auto &s : track.samples)
        {
            t.push_back(s.time);
            r.push_back(s.range);
            a.push_back(s.angle);
        }
        track.fitted_speed = fit_slope(t, r);

        std::vector<double> sorted = a;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        const double median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
        for (double angle : a)
            track.angle_drift = std::max(track.angle_drift, std::abs(angle - median));
        return track;
    }

    PeakTrack track_peak(const ArrayConfig &config, const PatternGrid &grid, DelayModel model,
                         const FieldOptions &options, ExecutionPolicy policy)
    {
        return track_peak(evaluate_cube(config, grid, model, options, policy));
    }
}
