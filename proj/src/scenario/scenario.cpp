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

#include "fdabeam/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

namespace fdabeam::scenario
{
    using nlohmann::json;

    namespace
    {
        std::string join(const std::vector<std::string> &lines)
        {
            std::string out = "invalid scenario configuration";
            for (const auto &l : lines)
                out += "\n  " + l;
            return out;
        }

        std::string child_path(const std::string &path, const std::string &key)
        {
            return path.empty() ? key : path + "." + key;
        }

        std::vector<double> default_track_times()
        {
            std::vector<double> t;
            for (int k = 0; k <= 40; ++k)
                t.push_back(k * 5e-8);
            return t;
        }

        std::vector<double> degrees_axis(double min_deg, double max_deg, double step_deg)
        {
            auto axis = uniform_axis(min_deg, max_deg, step_deg);
            for (auto &v : axis)
                v = deg_to_rad(v);
            return axis;
        }

        // Accumulates diagnostics instead of failing on the first bad field
        class Reader
        {
        public:
            std::vector<std::string> diags;

            void error(const std::string &path, const std::string &message) { diags.push_back(path + ": " + message); }

            bool object(const json &node, const std::string &path)
            {
                if (!node.is_object())
                {
                    error(path, "expected an object");
                    return false;
                }
                return true;
            }

            void allow(const json &obj, const std::string &path, std::initializer_list<const char *> keys)
            {
                for (auto it = obj.begin(); it != obj.end(); ++it)
                {
                    bool known = false;
                    for (const char *k : keys)
                        known = known || it.key() == k;
                    if (!known)
                        error(child_path(path, it.key()), "unknown field");
                }
            }

            std::optional<double> number(const json &obj, const std::string &path, const char *key, bool required)
            {
                const auto it = obj.find(key);
                if (it == obj.end())
                {
                    if (required)
                        error(child_path(path, key), "required field missing");
                    return std::nullopt;
                }
                if (!it->is_number())
                {
                    error(child_path(path, key), "expected a number");
                    return std::nullopt;
                }
                const double v = it->get<double>();
                if (!std::isfinite(v))
                {
                    error(child_path(path, key), "must be finite");
                    return std::nullopt;
                }
                return v;
            }

            double number_or(const json &obj, const std::string &path, const char *key, double fallback)
            {
                return number(obj, path, key, false).value_or(fallback);
            }

            double positive_or(const json &obj, const std::string &path, const char *key, double fallback)
            {
                const double v = number_or(obj, path, key, fallback);
                if (!(v > 0.0))
                    error(child_path(path, key), "must be > 0");
                return v;
            }

            std::size_t count_or(const json &obj, const std::string &path, const char *key, std::size_t fallback)
            {
                const auto it = obj.find(key);
                if (it == obj.end())
                    return fallback;
                if (!it->is_number_integer() || it->get<long long>() < 0)
                {
                    error(child_path(path, key), "expected a non-negative integer");
                    return fallback;
                }
                return it->get<std::size_t>();
            }

            bool bool_or(const json &obj, const std::string &path, const char *key, bool fallback)
            {
                const auto it = obj.find(key);
                if (it == obj.end())
                    return fallback;
                if (!it->is_boolean())
                {
                    error(child_path(path, key), "expected true or false");
                    return fallback;
                }
                return it->get<bool>();
            }

            std::vector<double> list_or(const json &obj, const std::string &path, const char *key, double scale,
                                        std::vector<double> fallback)
            {
                const auto it = obj.find(key);
                if (it == obj.end())
                    return fallback;
                if (!it->is_array())
                {
                    error(child_path(path, key), "expected an array of numbers");
                    return fallback;
                }
                std::vector<double> out;
                for (const auto &v : *it)
                {
                    if (!v.is_number())
                    {
                        error(child_path(path, key), "expected an array of numbers");
                        return fallback;
                    }
                    out.push_back(v.get<double>() * scale);
                }
                return out;
            }

            // Angles are given in degrees as <base>_deg or exactly in radians as <base>_rad
            std::string angle_key(const json &obj, const std::string &path, const std::string &base)
            {
                const std::string deg = base + "_deg", rad = base + "_rad";
                if (obj.contains(deg) && obj.contains(rad))
                    error(child_path(path, rad), "give either " + deg + " or " + rad);
                return obj.contains(rad) ? rad : deg;
            }

            static double angle_scale(const std::string &key) { return key.ends_with("_rad") ? 1.0 : pi / 180.0; }

            double angle_or(const json &obj, const std::string &path, const std::string &base, double fallback_rad)
            {
                const auto key = angle_key(obj, path, base);
                return number_or(obj, path, key.c_str(), fallback_rad / angle_scale(key)) * angle_scale(key);
            }

            std::vector<double> angle_axis(const json &obj, const std::string &path, const std::string &base,
                                           std::vector<double> fallback)
            {
                const auto key = angle_key(obj, path, base);
                return axis(obj, path, key.c_str(), angle_scale(key), std::move(fallback));
            }

            // Axis shorthand: number, [...], {"value": x}, {"values": [...]}, or {"min", "max", "step"}
            std::vector<double> axis(const json &obj, const std::string &path, const char *key, double scale,
                                     std::vector<double> fallback)
            {
                const auto it = obj.find(key);
                if (it == obj.end())
                    return fallback;
                const std::string p = child_path(path, key);
                const json &node = *it;
                if (node.is_number())
                    return {node.get<double>() * scale};
                if (node.is_array())
                    return list_or(obj, path, key, scale, fallback);
                if (!object(node, p))
                    return fallback;
                if (node.contains("values"))
                {
                    allow(node, p, {"values"});
                    return list_or(node, p, "values", scale, fallback);
                }
                if (node.contains("value"))
                {
                    allow(node, p, {"value"});
                    return {number_or(node, p, "value", 0.0) * scale};
                }
                allow(node, p, {"min", "max", "step"});
                const auto min = number(node, p, "min", true);
                const auto max = number(node, p, "max", true);
                const auto step = number(node, p, "step", true);
                if (!min || !max || !step)
                    return fallback;
                try
                {
                    auto values = uniform_axis(*min, *max, *step);
                    for (auto &v : values)
                        v *= scale;
                    return values;
                }
                catch (const ValidationError &e)
                {
                    for (const auto &v : e.violations())
                        error(p + "." + v.field.substr(v.field.find('.') + 1), v.message);
                    return fallback;
                }
            }

            void absorb(const ValidationError &e, const std::string &path)
            {
                for (const auto &v : e.violations())
                    error(child_path(path, v.field), v.message);
            }
        };

        EnvelopeSpec parse_envelope(Reader &rd, const json &node, const std::string &path)
        {
            if (!rd.object(node, path))
                return ContinuousWave{};
            const auto type_it = node.find("type");
            if (type_it == node.end() || !type_it->is_string())
            {
                rd.error(child_path(path, "type"), "required field missing (cw | gaussian | rect | switch)");
                return ContinuousWave{};
            }
            const std::string type = type_it->get<std::string>();
            EnvelopeSpec env = ContinuousWave{};
            if (type == "cw")
                rd.allow(node, path, {"type"});
            else if (type == "gaussian")
            {
                rd.allow(node, path, {"type", "fdhm_s", "center_s"});
                env = GaussianPulse{rd.number(node, path, "fdhm_s", true).value_or(1.0),
                                    rd.number_or(node, path, "center_s", 0.0)};
            }
            else if (type == "rect")
            {
                rd.allow(node, path, {"type", "duration_s", "start_s"});
                env = RectPulse{rd.number(node, path, "duration_s", true).value_or(1.0),
                                rd.number_or(node, path, "start_s", 0.0)};
            }
            else if (type == "switch")
            {
                rd.allow(node, path, {"type", "period_s", "duty", "offset_s"});
                env = PeriodicSwitch{rd.number(node, path, "period_s", true).value_or(1.0),
                                     rd.number(node, path, "duty", true).value_or(1.0),
                                     rd.number_or(node, path, "offset_s", 0.0)};
            }
            else
                rd.error(child_path(path, "type"), "unknown envelope type '" + type + "'");

            for (const auto &v : envelope_violations(env, path))
                rd.error(v.field, v.message);
            return env;
        }

        ArrayConfig parse_array(Reader &rd, const json &node, const std::string &path)
        {
            ArrayConfig fallback = default_scenario().array;
            if (!rd.object(node, path))
                return fallback;
            const auto kind_it = node.find("kind");
            if (kind_it == node.end() || !kind_it->is_string())
            {
                rd.error(child_path(path, "kind"), "required field missing (fda | phased | explicit)");
                return fallback;
            }
            const std::string kind = kind_it->get<std::string>();

            const auto carrier = rd.number(node, path, "carrier_hz", true);
            std::optional<double> spacing = rd.number(node, path, "spacing_m", false);
            if (const auto in_wavelengths = rd.number(node, path, "spacing_wavelengths", false))
            {
                if (spacing)
                    rd.error(child_path(path, "spacing_wavelengths"), "give either spacing_m or spacing_wavelengths");
                else if (carrier)
                    spacing = *in_wavelengths * wavelength(*carrier);
            }
            else if (!spacing)
                rd.error(child_path(path, "spacing_m"), "required field missing (or give spacing_wavelengths)");

            const EnvelopeSpec envelope =
                node.contains("envelope") ? parse_envelope(rd, node.at("envelope"), child_path(path, "envelope"))
                                          : EnvelopeSpec{ContinuousWave{}};

            if (kind == "fda" || kind == "phased")
            {
                rd.allow(node, path,
                         {"kind", "n_elements", "carrier_hz", "spacing_m", "spacing_wavelengths", "envelope",
                          kind == "fda" ? "delta_f_hz" : "steer_deg"});
                const std::size_t n = rd.count_or(node, path, "n_elements", 0);
                if (!node.contains("n_elements"))
                    rd.error(child_path(path, "n_elements"), "required field missing");
                const auto second = kind == "fda" ? rd.number(node, path, "delta_f_hz", true)
                                                  : std::optional<double>(rd.number_or(node, path, "steer_deg", 0.0));
                if (!carrier || !spacing || !second)
                    return fallback;
                try
                {
                    return kind == "fda" ? make_linear_fda(n, *spacing, *carrier, *second, envelope)
                                         : make_steered_phased_array(n, *spacing, *carrier, deg_to_rad(*second), envelope);
                }
                catch (const ValidationError &e)
                {
                    rd.absorb(e, path);
                    return fallback;
                }
            }
            if (kind != "explicit")
            {
                rd.error(child_path(path, "kind"), "unknown array kind '" + kind + "'");
                return fallback;
            }

            rd.allow(node, path, {"kind", "n_elements", "carrier_hz", "spacing_m", "spacing_wavelengths", "elements"});
            const auto el_it = node.find("elements");
            if (el_it == node.end() || !el_it->is_array())
            {
                rd.error(child_path(path, "elements"), "required array missing");
                return fallback;
            }
            ArrayConfig config;
            config.carrier = carrier.value_or(0.0);
            config.spacing = spacing.value_or(0.0);
            for (std::size_t n = 0; n < el_it->size(); ++n)
            {
                const std::string p = child_path(path, "elements[" + std::to_string(n) + "]");
                const json &e = (*el_it)[n];
                if (!rd.object(e, p))
                    continue;
                rd.allow(e, p, {"amplitude", "phase_rad", "freq_offset_hz", "envelope"});
                ElementExcitation x;
                x.amplitude = rd.number_or(e, p, "amplitude", 1.0);
                x.phase = rd.number_or(e, p, "phase_rad", 0.0);
                x.freq_offset = rd.number_or(e, p, "freq_offset_hz", 0.0);
                if (e.contains("envelope"))
                    x.envelope = parse_envelope(rd, e.at("envelope"), child_path(p, "envelope"));
                config.elements.push_back(x);
            }
            config.n_elements = rd.count_or(node, path, "n_elements", config.elements.size());
            if (carrier && spacing)
                for (const auto &v : validate(config))
                    rd.error(child_path(path, v.field), v.message);
            return config;
        }

        PatternGrid parse_grid(Reader &rd, const json &node, const std::string &path, const PatternGrid &fallback)
        {
            if (!rd.object(node, path))
                return fallback;
            rd.allow(node, path, {"range_m", "angle_deg", "angle_rad", "time_s"});
            PatternGrid grid{rd.axis(node, path, "range_m", 1.0, fallback.range_axis),
                             rd.angle_axis(node, path, "angle", fallback.angle_axis),
                             rd.axis(node, path, "time_s", 1.0, fallback.time_axis)};
            for (const auto &v : validate(grid))
                rd.error(child_path(path, v.field), v.message);
            return grid;
        }

        void parse_fig1(Reader &rd, const json &node, const std::string &path, Fig1Settings &s)
        {
            if (!rd.object(node, path))
                return;
            rd.allow(node, path,
                     {"fdhm_s", "rect_duration_s", "window_center_m", "window_width_m", "range_step_m",
                      "box_range_step_m", "box_angle_step_deg", "box_angle_step_rad", "bce_widths_m", "bce_fixed_width_m",
                      "bce_center_step_m", "bce_time_offsets_s"});
            s.fdhm = rd.positive_or(node, path, "fdhm_s", s.fdhm);
            s.rect_duration = rd.positive_or(node, path, "rect_duration_s", s.rect_duration);
            s.window_center = rd.positive_or(node, path, "window_center_m", s.window_center);
            s.window_width = rd.positive_or(node, path, "window_width_m", s.window_width);
            s.range_step = rd.positive_or(node, path, "range_step_m", s.range_step);
            s.box_range_step = rd.positive_or(node, path, "box_range_step_m", s.box_range_step);
            s.box_angle_step = rd.angle_or(node, path, "box_angle_step", s.box_angle_step);
            if (!(s.box_angle_step > 0.0))
                rd.error(child_path(path, "box_angle_step_deg"), "must be > 0");
            s.bce_widths = rd.list_or(node, path, "bce_widths_m", 1.0, s.bce_widths);
            s.bce_fixed_width = rd.positive_or(node, path, "bce_fixed_width_m", s.bce_fixed_width);
            s.bce_center_step = rd.positive_or(node, path, "bce_center_step_m", s.bce_center_step);
            s.bce_time_offsets = rd.list_or(node, path, "bce_time_offsets_s", 1.0, s.bce_time_offsets);
            if (s.window_width / 2.0 > s.window_center)
                rd.error(child_path(path, "window_width_m"), "window must not extend below zero range");
        }

        void parse_invariance(Reader &rd, const json &node, const std::string &path, InvarianceSettings &s)
        {
            if (!rd.object(node, path))
                return;
            rd.allow(node, path,
                     {"sample_count", "dt_count", "range_min_m", "range_max_m", "angle_min_deg", "angle_max_deg", "angle_min_rad", "angle_max_rad",
                      "time_min_s", "time_max_s", "dt_max_s", "tolerance", "focus_range_m", "focus_angle_deg", "focus_angle_rad",
                      "probe_samples", "probe_window_s", "swing_threshold_db"});
            s.sample_count = rd.count_or(node, path, "sample_count", s.sample_count);
            s.dt_count = rd.count_or(node, path, "dt_count", s.dt_count);
            s.range_min = rd.positive_or(node, path, "range_min_m", s.range_min);
            s.range_max = rd.positive_or(node, path, "range_max_m", s.range_max);
            s.angle_min = rd.angle_or(node, path, "angle_min", s.angle_min);
            s.angle_max = rd.angle_or(node, path, "angle_max", s.angle_max);
            s.time_min = rd.number_or(node, path, "time_min_s", s.time_min);
            s.time_max = rd.number_or(node, path, "time_max_s", s.time_max);
            s.dt_max = rd.positive_or(node, path, "dt_max_s", s.dt_max);
            s.tolerance = rd.positive_or(node, path, "tolerance", s.tolerance);
            s.focus_range = rd.positive_or(node, path, "focus_range_m", s.focus_range);
            s.focus_angle = rd.angle_or(node, path, "focus_angle", s.focus_angle);
            s.probe_samples = rd.count_or(node, path, "probe_samples", s.probe_samples);
            s.probe_window = rd.positive_or(node, path, "probe_window_s", s.probe_window);
            s.swing_threshold_db = rd.number_or(node, path, "swing_threshold_db", s.swing_threshold_db);

            if (s.sample_count == 0 || s.dt_count == 0)
                rd.error(path, "sample_count and dt_count must be >= 1");
            if (s.probe_samples < 2)
                rd.error(child_path(path, "probe_samples"), "must be >= 2");
            if (!(s.range_min < s.range_max))
                rd.error(child_path(path, "range_max_m"), "must exceed range_min_m");
            if (!(s.angle_min < s.angle_max) || !(std::abs(s.angle_min) < pi / 2) || !(std::abs(s.angle_max) < pi / 2))
                rd.error(child_path(path, "angle_max_deg"), "angles must satisfy -90 < min < max < 90");
            if (!(s.time_min < s.time_max))
                rd.error(child_path(path, "time_max_s"), "must exceed time_min_s");
            // keeps t and t + dt exactly representable on the 2^-60 s lattice
            if (std::max(std::abs(s.time_min), std::abs(s.time_max)) + s.dt_max >= 0x1p-7)
                rd.error(child_path(path, "time_max_s"), "|t| + dt_max must stay below 7.8 ms");
            if (!(s.range_min > speed_of_light * s.dt_max))
                rd.error(child_path(path, "dt_max_s"), "c * dt_max must be smaller than range_min_m");
            if (s.range_max + speed_of_light * s.dt_max >= 0x1p22)
                rd.error(child_path(path, "range_max_m"), "range_max_m + c * dt_max must stay below 4194 km");
            if (!(std::abs(s.focus_angle) < pi / 2))
                rd.error(child_path(path, "focus_angle_deg"), "must lie strictly inside (-90, 90)");
        }

        void parse_track(Reader &rd, const json &node, const std::string &path, TrackSettings &s)
        {
            if (!rd.object(node, path))
                return;
            rd.allow(node, path, {"grid", "sweep"});
            if (node.contains("grid"))
                s.grid = parse_grid(rd, node.at("grid"), child_path(path, "grid"), s.grid);
            if (node.contains("sweep"))
            {
                const std::string p = child_path(path, "sweep");
                const json &sw = node.at("sweep");
                if (!rd.object(sw, p))
                    return;
                rd.allow(sw, p,
                         {"enabled", "durations_s", "duty", "delta_f_hz", "observe_range_m", "angle_deg", "angle_rad",
                          "samples_per_pulse"});
                auto &w = s.sweep;
                w.enabled = rd.bool_or(sw, p, "enabled", true);
                w.durations = rd.list_or(sw, p, "durations_s", 1.0, w.durations);
                w.duty = rd.positive_or(sw, p, "duty", w.duty);
                if (w.duty > 1.0)
                    rd.error(child_path(p, "duty"), "duty must be in (0, 1]");
                w.delta_f = rd.number_or(sw, p, "delta_f_hz", w.delta_f);
                w.observe_range = rd.positive_or(sw, p, "observe_range_m", w.observe_range);
                w.angle_axis = rd.angle_axis(sw, p, "angle", w.angle_axis);
                w.samples_per_pulse = rd.count_or(sw, p, "samples_per_pulse", w.samples_per_pulse);
                if (w.samples_per_pulse < 2)
                    rd.error(child_path(p, "samples_per_pulse"), "must be >= 2");
                for (double d : w.durations)
                    if (!(d > 0.0))
                        rd.error(child_path(p, "durations_s"), "durations must be > 0");
            }
        }

        json axis_json(const std::vector<double> &axis) { return json(axis); }

        json grid_json(const PatternGrid &g)
        {
            return {{"range_m", axis_json(g.range_axis)},
                    {"angle_rad", axis_json(g.angle_axis)},
                    {"time_s", axis_json(g.time_axis)}};
        }
    }

    ConfigError::ConfigError(std::vector<std::string> diagnostics)
        : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics))
    {
    }

    Scenario default_scenario()
    {
        Scenario s;
        const double f0 = 1e10;
        s.array = make_linear_fda(19, wavelength(f0) / 2.0, f0, 1e4);
        s.grid = {uniform_axis(10000.0, 11000.0, 1.0), {0.0}, {0.0}};

        s.fig1.bce_widths = uniform_axis(500.0, 30000.0, 500.0);
        for (int k = -10; k <= 10; ++k)
            s.fig1.bce_time_offsets.push_back(k * 2e-6);

        s.track.grid = {uniform_axis(29500.0, 31000.0, 0.25), {0.0}, default_track_times()};
        s.track.sweep.durations = {0.5e-6, 1e-6, 2e-6, 4e-6, 8e-6};
        s.track.sweep.angle_axis = degrees_axis(-30.0, 30.0, 0.01);
        refresh_expanded(s);
        return s;
    }

    Scenario parse_scenario(const json &doc)
    {
        Reader rd;
        Scenario s = default_scenario();
        if (!doc.is_object())
            throw ConfigError({"<root>: expected a JSON object"});

        rd.allow(doc, "", {"schema", "array", "options", "model", "grid", "seed", "output", "fig1", "invariance", "track"});
        const auto schema = doc.find("schema");
        if (schema == doc.end())
            rd.error("schema", std::string("required field missing (use \"") + schema_id + "\")");
        else if (!schema->is_string() || schema->get<std::string>() != schema_id)
            rd.error("schema", std::string("unsupported schema; expected \"") + schema_id + "\"");

        if (doc.contains("array"))
            s.array = parse_array(rd, doc.at("array"), "array");
        if (doc.contains("options"))
        {
            const json &o = doc.at("options");
            if (rd.object(o, "options"))
            {
                rd.allow(o, "options", {"offset_aperture_coupling", "spreading_reference_m"});
                s.options.offset_aperture_coupling = rd.bool_or(o, "options", "offset_aperture_coupling", true);
                if (o.contains("spreading_reference_m") && !o.at("spreading_reference_m").is_null())
                    s.options.spreading_reference = rd.positive_or(o, "options", "spreading_reference_m", 1.0);
            }
        }
        if (doc.contains("model"))
        {
            const json &m = doc.at("model");
            if (m == "farfield")
                s.model = DelayModel::FarField;
            else if (m == "exact")
                s.model = DelayModel::ExactSpherical;
            else
                rd.error("model", "expected \"farfield\" or \"exact\"");
        }
        if (doc.contains("grid"))
            s.grid = parse_grid(rd, doc.at("grid"), "grid", s.grid);
        if (doc.contains("seed"))
        {
            const json &seed = doc.at("seed");
            if (seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<long long>() >= 0))
                s.seed = seed.get<std::uint64_t>();
            else
                rd.error("seed", "expected a non-negative integer");
        }
        if (doc.contains("output"))
        {
            if (doc.at("output").is_string())
                s.output_prefix = doc.at("output").get<std::string>();
            else
                rd.error("output", "expected a string path prefix");
        }
        if (doc.contains("fig1"))
            parse_fig1(rd, doc.at("fig1"), "fig1", s.fig1);
        if (doc.contains("invariance"))
            parse_invariance(rd, doc.at("invariance"), "invariance", s.invariance);
        if (doc.contains("track"))
            parse_track(rd, doc.at("track"), "track", s.track);

        if (!rd.diags.empty())
            throw ConfigError(rd.diags);
        refresh_expanded(s);
        return s;
    }

    Scenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError({path.string() + ": cannot open configuration file"});
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            {
                if (text[i] == '\n')
                {
                    ++line;
                    column = 1;
                }
                else
                    ++column;
            }
            throw ConfigError({path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) +
                               ": JSON syntax error: " + e.what()});
        }
        return parse_scenario(doc);
    }

    json envelope_to_json(const EnvelopeSpec &envelope)
    {
        return std::visit(
            [](const auto &v) -> json
            {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ContinuousWave>)
                    return {{"type", "cw"}};
                else if constexpr (std::is_same_v<T, GaussianPulse>)
                    return {{"type", "gaussian"}, {"fdhm_s", v.fdhm}, {"center_s", v.center}};
                else if constexpr (std::is_same_v<T, RectPulse>)
                    return {{"type", "rect"}, {"duration_s", v.duration}, {"start_s", v.start}};
                else
                    return {{"type", "switch"}, {"period_s", v.period}, {"duty", v.duty}, {"offset_s", v.offset}};
            },
            envelope);
    }

    json array_to_json(const ArrayConfig &config)
    {
        json elements = json::array();
        for (const auto &e : config.elements)
            elements.push_back({{"amplitude", e.amplitude},
                                {"phase_rad", e.phase},
                                {"freq_offset_hz", e.freq_offset},
                                {"envelope", envelope_to_json(e.envelope)}});
        return {{"kind", "explicit"},
                {"n_elements", config.n_elements},
                {"spacing_m", config.spacing},
                {"carrier_hz", config.carrier},
                {"elements", elements}};
    }

    void refresh_expanded(Scenario &s)
    {
        json options = {{"offset_aperture_coupling", s.options.offset_aperture_coupling}};
        options["spreading_reference_m"] = s.options.spreading_reference ? json(*s.options.spreading_reference) : json(nullptr);

        const auto &f = s.fig1;
        const auto &v = s.invariance;
        const auto &w = s.track.sweep;
        s.expanded = {
            {"schema", schema_id},
            {"array", array_to_json(s.array)},
            {"options", options},
            {"model", to_string(s.model)},
            {"grid", grid_json(s.grid)},
            {"seed", s.seed},
            {"fig1",
             {{"fdhm_s", f.fdhm},
              {"rect_duration_s", f.rect_duration},
              {"window_center_m", f.window_center},
              {"window_width_m", f.window_width},
              {"range_step_m", f.range_step},
              {"box_range_step_m", f.box_range_step},
              {"box_angle_step_rad", f.box_angle_step},
              {"bce_widths_m", f.bce_widths},
              {"bce_fixed_width_m", f.bce_fixed_width},
              {"bce_center_step_m", f.bce_center_step},
              {"bce_time_offsets_s", f.bce_time_offsets}}},
            {"invariance",
             {{"sample_count", v.sample_count},
              {"dt_count", v.dt_count},
              {"range_min_m", v.range_min},
              {"range_max_m", v.range_max},
              {"angle_min_rad", v.angle_min},
              {"angle_max_rad", v.angle_max},
              {"time_min_s", v.time_min},
              {"time_max_s", v.time_max},
              {"dt_max_s", v.dt_max},
              {"tolerance", v.tolerance},
              {"focus_range_m", v.focus_range},
              {"focus_angle_rad", v.focus_angle},
              {"probe_samples", v.probe_samples},
              {"probe_window_s", v.probe_window},
              {"swing_threshold_db", v.swing_threshold_db}}},
            {"track",
             {{"grid", grid_json(s.track.grid)},
              {"sweep",
               {{"enabled", w.enabled},
                {"durations_s", w.durations},
                {"duty", w.duty},
                {"delta_f_hz", w.delta_f},
                {"observe_range_m", w.observe_range},
                {"angle_rad", w.angle_axis},
                {"samples_per_pulse", w.samples_per_pulse}}}}},
        };
    }
}
