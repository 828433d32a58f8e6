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

namespace fdabeam
{
    // Reference evaluator, kept single-threaded for testing the parallel kernel
    PatternCube evaluate_cube_serial(const ArrayConfig &config, const PatternGrid &grid, DelayModel model,
                                     const FieldOptions &options)
    {
        throw_if_any(validate(grid));
        const FieldKernel kernel(config, model, options);

        PatternCube cube{grid, std::vector<double>(grid.size()), config_digest(config, model, options)};
        for (std::size_t i = 0; i < grid.n_range(); ++i)
            for (std::size_t j = 0; j < grid.n_angle(); ++j)
            {
                const ObservationPoint point{grid.range_axis[i], grid.angle_axis[j]};
                for (std::size_t k = 0; k < grid.n_time(); ++k)
                    cube.magnitudes[cube.index(i, j, k)] = kernel.magnitude(point, grid.time_axis[k]);
            }
        return cube;
    }
}
