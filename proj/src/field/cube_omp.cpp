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

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdabeam
{
    int resolve_threads(ExecutionPolicy policy)
    {
        if (policy.threads > 0)
            return policy.threads;
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }

    PatternCube evaluate_cube(const ArrayConfig &config, const PatternGrid &grid, DelayModel model,
                              const FieldOptions &options, ExecutionPolicy policy)
    {
        throw_if_any(validate(grid));
        const FieldKernel kernel(config, model, options);

        // Domain checks up front so the parallel region never throws
        for (double r : grid.range_axis)
            for (double a : grid.angle_axis)
                kernel.check({r, a});

        PatternCube cube{grid, std::vector<double>(grid.size()), config_digest(config, model, options)};
        const auto n_angle = static_cast<std::ptrdiff_t>(grid.n_angle());
        const auto n_points = static_cast<std::ptrdiff_t>(grid.n_range() * grid.n_angle());
        const std::size_t n_time = grid.n_time();
        double *out = cube.magnitudes.data();
        [[maybe_unused]] const int threads = resolve_threads(policy);

        // Each magnitude depends only on its own grid point, so the result is independent of scheduling
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (std::ptrdiff_t ij = 0; ij < n_points; ++ij)
        {
            const ObservationPoint point{grid.range_axis[static_cast<std::size_t>(ij / n_angle)],
                                         grid.angle_axis[static_cast<std::size_t>(ij % n_angle)]};
            double *row = out + static_cast<std::size_t>(ij) * n_time;
            for (std::size_t k = 0; k < n_time; ++k)
                row[k] = std::abs(kernel.referenced_sum_unchecked(point, grid.time_axis[k]));
        }
        return cube;
    }
}
