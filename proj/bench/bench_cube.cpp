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

// Serial reference vs OpenMP cube evaluation on a range-angle grid of the default FDA.

#include "fdabeam/constants.hpp"
#include "fdabeam/pattern.hpp"

#include <benchmark/benchmark.h>

namespace
{
    using namespace fdabeam;

    const ArrayConfig &array_for(std::size_t n)
    {
        static std::vector<std::pair<std::size_t, ArrayConfig>> cache;
        for (const auto &[k, v] : cache)
            if (k == n)
                return v;
        cache.emplace_back(n, make_linear_fda(n, wavelength(1e10) / 2, 1e10, 1e4));
        return cache.back().second;
    }

    PatternGrid grid_for(std::size_t points)
    {
        return {uniform_axis(10000.0, 10000.0 + static_cast<double>(points - 1), 1.0),
                uniform_axis(-1.0, 1.0, 0.02), {1e-4}};
    }

    void serial(benchmark::State &state)
    {
        const auto &config = array_for(static_cast<std::size_t>(state.range(0)));
        const auto grid = grid_for(static_cast<std::size_t>(state.range(1)));
        for (auto _ : state)
            benchmark::DoNotOptimize(evaluate_cube_serial(config, grid, DelayModel::FarField));
        state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
    }

    void parallel(benchmark::State &state)
    {
        const auto &config = array_for(static_cast<std::size_t>(state.range(0)));
        const auto grid = grid_for(static_cast<std::size_t>(state.range(1)));
        for (auto _ : state)
            benchmark::DoNotOptimize(evaluate_cube(config, grid, DelayModel::FarField));
        state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
    }
}

BENCHMARK(serial)->Args({19, 200})->Args({64, 200})->Args({19, 2000})->Unit(benchmark::kMillisecond);
BENCHMARK(parallel)->Args({19, 200})->Args({64, 200})->Args({19, 2000})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
