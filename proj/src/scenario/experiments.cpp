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

#include "fdabeam/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fdabeam::scenario
{
    namespace
    {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();

        template <class F>
        double or_nan(F &&measure)
        {
            try
            {
                return measure();
            }
            catch (const MeasurementError &)
            {
                return nan;
            }
        }

        std::vector<double> normalized(std::vector<double> cut)
        {
            const double peak = cut.empty() ? 0.0 : *std::max_element(cut.begin(), cut.end());
            if (peak > 0.0)
                for (auto &v : cut)
                    v /= peak;
            return cut;
        }

        RegionSpec centered_range(double center, double width, double angle_half = pi / 2.0)
        {
            return {center - width / 2.0, center + width / 2.0, -angle_half, angle_half};
        }

        std::vector<double> symmetric_angles(double step, double limit)
        {
            const auto k_max = static_cast<int>(std::floor(limit / step));
            std::vector<double> axis;
            for (int k = -k_max; k <= k_max; ++k)
                axis.push_back(k * step);
            return axis;
        }
    }

    Fig1Result run_compare_fig1(const Scenario &scenario, ExecutionPolicy policy)
    {
        const auto &f = scenario.fig1;
        const auto &fda = scenario.array;
        Fig1Result out;

        // t0: the pulse peak (retarded time 0) and the FDA focus sit at the window center
        out.t0 = f.window_center / speed_of_light;
        out.expected_gaussian_fwhm = speed_of_light * f.fdhm;

        const auto gaussian = make_steered_phased_array(fda.n_elements, fda.spacing, fda.carrier, 0.0,
                                                        GaussianPulse{f.fdhm, 0.0});
        const auto rect = make_steered_phased_array(fda.n_elements, fda.spacing, fda.carrier, 0.0,
                                                    RectPulse{f.rect_duration, -f.rect_duration / 2.0});
        const ArrayConfig *arrays[3] = {&fda, &gaussian, &rect};
        const char *names[3] = {"fda", "gaussian", "rect"};

        const double lo = f.window_center - f.window_width / 2.0;
        const double hi = f.window_center + f.window_width / 2.0;
        out.range_axis = uniform_axis(lo, hi, f.range_step);

        const PatternGrid cut_grid{out.range_axis, {0.0}, {out.t0}};
        std::vector<PatternCube> cuts;
        for (const auto *a : arrays)
            cuts.push_back(evaluate_cube(*a, cut_grid, scenario.model, scenario.options, policy));
        out.fda = normalized(cuts[0].range_cut(0, 0));
        out.gaussian = normalized(cuts[1].range_cut(0, 0));
        out.rect = normalized(cuts[2].range_cut(0, 0));

        // range x angle cubes for the FWHM box
        const PatternGrid box_grid{uniform_axis(lo, hi, f.box_range_step),
                                   symmetric_angles(f.box_angle_step, deg_to_rad(89.5)), {out.t0}};
        std::vector<PatternCube> boxes;
        for (const auto *a : arrays)
            boxes.push_back(evaluate_cube(*a, box_grid, scenario.model, scenario.options, policy));

        const double gaussian_fwhm = or_nan([&] { return fwhm_range(cuts[1], 0, 0); });
        out.box_range_width = std::isnan(gaussian_fwhm) ? out.expected_gaussian_fwhm : gaussian_fwhm;
        {
            const auto &axis = box_grid.range_axis;
            const auto center = static_cast<std::size_t>(
                std::min_element(axis.begin(), axis.end(),
                                 [&](double a, double b) { return std::abs(a - f.window_center) < std::abs(b - f.window_center); }) -
                axis.begin());
            std::vector<double> angle_cut(box_grid.n_angle());
            for (std::size_t j = 0; j < angle_cut.size(); ++j)
                angle_cut[j] = boxes[1].at(center, j, 0);
            out.box_angle_width = or_nan([&] { return fwhm(box_grid.angle_axis, angle_cut); });
        }
        const RegionSpec box = centered_range(f.window_center, out.box_range_width,
                                              std::isnan(out.box_angle_width) ? pi / 2.0 : out.box_angle_width / 2.0);

        for (int p = 0; p < 3; ++p)
        {
            PatternSummary s;
            s.name = names[p];
            s.peak_magnitude = cuts[p].max_magnitude();
            s.fwhm = or_nan([&] { return fwhm_range(cuts[p], 0, 0); });
            try
            {
                s.sidelobe_db = sidelobe_level(cuts[p], 0, 0);
            }
            catch (const MeasurementError &)
            {
                s.sidelobe_db = nan;
            }
            s.bce_fwhm_target = or_nan([&] { return bce(cuts[p], 0, centered_range(f.window_center, out.box_range_width)); });
            s.bce_box = or_nan([&] { return bce(boxes[p], 0, box); });
            out.summary.push_back(s);
        }

        auto fill = [&](BceTable &table, const std::vector<PatternCube> &cubes, auto &&region_for, auto &&time_for)
        {
            for (std::size_t i = 0; i < table.parameter.size(); ++i)
            {
                const RegionSpec region = region_for(table.parameter[i]);
                const std::size_t k = time_for(i);
                table.fda.push_back(or_nan([&] { return bce(cubes[0], k, region); }));
                table.gaussian.push_back(or_nan([&] { return bce(cubes[1], k, region); }));
                table.rect.push_back(or_nan([&] { return bce(cubes[2], k, region); }));
            }
        };

        out.by_width.parameter = f.bce_widths;
        fill(out.by_width, cuts, [&](double w) { return centered_range(f.window_center, w); }, [](std::size_t) { return 0; });

        for (double c = lo + f.bce_fixed_width / 2.0; c <= hi - f.bce_fixed_width / 2.0 + 1e-9; c += f.bce_center_step)
            out.by_center.parameter.push_back(c);
        fill(out.by_center, cuts, [&](double c) { return centered_range(c, f.bce_fixed_width); },
             [](std::size_t) { return 0; });

        if (!f.bce_time_offsets.empty())
        {
            PatternGrid time_grid{out.range_axis, {0.0}, {}};
            for (double dt : f.bce_time_offsets)
                time_grid.time_axis.push_back(out.t0 + dt);
            std::vector<PatternCube> moving;
            for (const auto *a : arrays)
                moving.push_back(evaluate_cube(*a, time_grid, scenario.model, scenario.options, policy));
            out.by_time.parameter = f.bce_time_offsets;
            fill(out.by_time, moving, [&](double) { return centered_range(f.window_center, f.bce_fixed_width); },
                 [](std::size_t i) { return i; });
        }
        return out;
    }

    double uniform(std::mt19937_64 &rng, double lo, double hi)
    {
        const double unit = static_cast<double>(rng() >> 11) * 0x1p-53;
        return lo + (hi - lo) * unit;
    }

    double to_lattice(double value, int bits) { return std::ldexp(std::nearbyint(std::ldexp(value, bits)), -bits); }

    InvarianceDraw draw_invariance_samples(std::mt19937_64 &rng, const InvarianceSettings &s)
    {
        InvarianceDraw draw;
        draw.samples.reserve(s.sample_count);
        for (std::size_t i = 0; i < s.sample_count; ++i)
        {
            InvarianceSample sample;
            sample.point.range = to_lattice(uniform(rng, s.range_min, s.range_max), 30);
            sample.point.angle = uniform(rng, s.angle_min, s.angle_max);
            sample.time = to_lattice(uniform(rng, s.time_min, s.time_max), 60);
            draw.samples.push_back(sample);
        }
        for (std::size_t d = 0; d < s.dt_count; ++d)
            draw.dts.push_back(to_lattice(uniform(rng, -s.dt_max, s.dt_max), 30));
        return draw;
    }

    ProbeResult fixed_point_probe(const ArrayConfig &config, DelayModel model, const FieldOptions &options,
                                  const InvarianceSettings &settings)
    {
        double min_offset = 0.0;
        for (const auto &e : config.elements)
            if (e.freq_offset != 0.0 && (min_offset == 0.0 || std::abs(e.freq_offset) < min_offset))
                min_offset = std::abs(e.freq_offset);

        ProbeResult probe;
        probe.window = min_offset > 0.0 ? 1.0 / min_offset : settings.probe_window;
        const FieldKernel kernel(config, model, options);
        const ObservationPoint focus{settings.focus_range, settings.focus_angle};
        const double start = settings.focus_range / speed_of_light;
        probe.min_magnitude = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < settings.probe_samples; ++k)
        {
            const double t = start + probe.window * static_cast<double>(k) / static_cast<double>(settings.probe_samples);
            const double m = kernel.magnitude(focus, t);
            probe.max_magnitude = std::max(probe.max_magnitude, m);
            probe.min_magnitude = std::min(probe.min_magnitude, m);
        }
        const double floor = std::max(probe.min_magnitude, relative_deviation_floor);
        if (probe.max_magnitude > floor)
            probe.swing_db = 20.0 * std::log10(probe.max_magnitude / floor);
        return probe;
    }

    InvarianceRun run_check_invariance(const Scenario &scenario, ExecutionPolicy policy)
    {
        const auto &s = scenario.invariance;
        std::mt19937_64 rng(scenario.seed);
        const auto draw = draw_invariance_samples(rng, s);

        InvarianceRun run;
        run.report = check_time_range_invariance(scenario.array, draw.samples, draw.dts, scenario.model,
                                                 scenario.options, policy);
        if (scenario.model == DelayModel::FarField)
        {
            run.criterion = "relative";
            run.checked_value = run.report.max_relative_deviation;
            run.tolerance = s.tolerance;
        }
        else
        {
            run.criterion = "near_field_budget";
            run.checked_value = run.report.max_peak_normalized_deviation;
            run.tolerance = near_field_budget(scenario.array, s.range_min - speed_of_light * s.dt_max, scenario.options);
        }
        run.shift_law_holds = run.checked_value <= run.tolerance;
        run.offsets_nonzero = std::any_of(scenario.array.elements.begin(), scenario.array.elements.end(),
                                          [](const ElementExcitation &e) { return e.freq_offset != 0.0; });
        run.probe = fixed_point_probe(scenario.array, scenario.model, scenario.options, s);

        if (!run.shift_law_holds)
            run.exit_code = 1;
        else if (run.offsets_nonzero && run.probe.swing_db > s.swing_threshold_db)
            run.exit_code = 0;
        else
            run.exit_code = 4;
        return run;
    }

    std::vector<SweepRow> run_duration_sweep(const Scenario &scenario, ExecutionPolicy policy)
    {
        const auto &w = scenario.track.sweep;
        const auto &base = scenario.array;
        std::vector<SweepRow> rows;
        for (double duration : w.durations)
        {
            const auto config = make_linear_fda(base.n_elements, base.spacing, base.carrier, w.delta_f,
                                                PeriodicSwitch{duration / w.duty, w.duty, 0.0});
            // keep every element's retarded time inside the on-window
            const double margin = 2.0 * config.aperture() / speed_of_light;
            if (!(duration > 4.0 * margin))
                throw ValidationError("track.sweep.durations_s", "pulse duration too short for the aperture");

            PatternGrid grid{{w.observe_range}, w.angle_axis, {}};
            const double start = w.observe_range / speed_of_light + margin;
            const double span = duration - 2.0 * margin;
            for (std::size_t j = 0; j < w.samples_per_pulse; ++j)
                grid.time_axis.push_back(start + span * static_cast<double>(j) /
                                                     static_cast<double>(w.samples_per_pulse - 1));

            const auto track = track_peak(config, grid, scenario.model, scenario.options, policy);
            rows.push_back({duration, track.angle_drift, track.samples.front().angle, track.samples.back().angle});
        }
        return rows;
    }

    TrackRun run_track_peak(const Scenario &scenario, ExecutionPolicy policy)
    {
        TrackRun run;
        run.track = track_peak(scenario.array, scenario.track.grid, scenario.model, scenario.options, policy);
        if (scenario.track.sweep.enabled)
            run.sweep = run_duration_sweep(scenario, policy);
        return run;
    }
}
