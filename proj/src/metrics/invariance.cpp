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

#include "fdabeam/constants.hpp"
#include "fdabeam/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace fdabeam
{
    namespace
    {
        struct SampleResult
        {
            double relative = 0.0;
            double peak_normalized = 0.0;
            std::size_t dt_index = 0;
        };
    }

    InvarianceReport check_time_range_invariance(const ArrayConfig &config, std::span<const InvarianceSample> samples,
                                                 std::span<const double> dt_list, DelayModel model,
                                                 const FieldOptions &options, ExecutionPolicy policy)
    {
        if (samples.empty() || dt_list.empty())
            throw ValidationError("samples", "invariance check needs at least one sample and one dt");
        const FieldKernel kernel(config, model, options);
        for (const auto &s : samples)
        {
            kernel.check(s.point);
            for (double dt : dt_list)
                kernel.check(shifted_point(s.point, dt));
        }

        const double amplitude_sum = config.amplitude_sum();
        const double peak_scale = amplitude_sum > 0.0 ? amplitude_sum : relative_deviation_floor;

        std::vector<SampleResult> results(samples.size());
        const auto n_samples = static_cast<std::ptrdiff_t>(samples.size());
        [[maybe_unused]] const int threads = resolve_threads(policy);

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
        for (std::ptrdiff_t s = 0; s < n_samples; ++s)
        {
            const auto &sample = samples[static_cast<std::size_t>(s)];
            const double base = std::abs(kernel.referenced_sum_unchecked(sample.point, sample.time));
            auto &res = results[static_cast<std::size_t>(s)];
            for (std::size_t d = 0; d < dt_list.size(); ++d)
            {
                const double dt = dt_list[d];
                const ObservationPoint moved{sample.point.range + speed_of_light * dt, sample.point.angle};
                const double shifted = std::abs(kernel.referenced_sum_unchecked(moved, sample.time + dt));
                const double diff = std::abs(shifted - base);
                const double rel = diff / std::max(base, relative_deviation_floor);
                if (rel > res.relative)
                {
                    res.relative = rel;
                    res.dt_index = d;
                }
                res.peak_normalized = std::max(res.peak_normalized, diff / peak_scale);
            }
        }

        // fixed-order reduction: the first sample attaining the maximum is the witness
        InvarianceReport report;
        std::size_t witness = 0;
        for (std::size_t s = 0; s < results.size(); ++s)
        {
            if (results[s].relative > report.max_relative_deviation)
            {
                report.max_relative_deviation = results[s].relative;
                witness = s;
            }
            report.max_peak_normalized_deviation =
                std::max(report.max_peak_normalized_deviation, results[s].peak_normalized);
        }
        report.witness = samples[witness];
        report.witness_dt = dt_list[results[witness].dt_index];
        report.samples_checked = samples.size() * dt_list.size();
        return report;
    }

    double near_field_budget(const ArrayConfig &config, double min_range, const FieldOptions &options)
    {
        require_valid(config);
        if (options.spreading_reference)
            throw ValidationError("spreading_reference", "near-field budget assumes no 1/r spreading");
        const double x_max = config.aperture();
        if (!(min_range > x_max))
            throw DomainError("near-field budget needs observation ranges beyond the aperture");

        // 0 <= r_n(exact) - r_n(far field) <= x^2 / (2 (r - x)), so per-element delay mismatch <= e_max / c
        const double e_max = x_max * x_max / (2.0 * (min_range - x_max));
        double weighted = 0.0, amplitude_sum = 0.0;
        for (const auto &e : config.elements)
        {
            const double rate = two_pi * (config.carrier + (options.offset_aperture_coupling ? std::abs(e.freq_offset) : 0.0));
            weighted += e.amplitude * (rate + envelope_max_slope(e.envelope));
            amplitude_sum += e.amplitude;
        }
        if (!(amplitude_sum > 0.0))
            return 0.0;
        return weighted / amplitude_sum * e_max / speed_of_light;
    }
}
