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

#include "doctest.h"

#include "fdabeam/experiments.hpp"
#include "fdabeam/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <random>

using namespace fdabeam;
using namespace fdabeam::scenario;
using nlohmann::json;

namespace
{
    std::string joined(const ConfigError &e)
    {
        std::string all;
        for (const auto &d : e.diagnostics())
            all += d + "\n";
        return all;
    }

    std::string diagnostics_of(const json &doc)
    {
        try
        {
            parse_scenario(doc);
        }
        catch (const ConfigError &e)
        {
            return joined(e);
        }
        return {};
    }

    json minimal()
    {
        return json::parse(R"({
            "schema": "fdabeam.scenario/1",
            "array": {"kind": "fda", "n_elements": 19, "carrier_hz": 1e10, "spacing_wavelengths": 0.5,
                      "delta_f_hz": 1e4}
        })");
    }
}

TEST_CASE("default scenario")
{
    const auto s = default_scenario();
    CHECK(s.array == make_linear_fda(19, wavelength(1e10) / 2, 1e10, 1e4));
    CHECK(s.model == DelayModel::FarField);
    CHECK(s.grid.n_range() == 1001);
    CHECK(s.expanded.at("schema") == "fdabeam.scenario/1");
    CHECK_FALSE(s.expanded.contains("output"));
}

TEST_CASE("parsing a minimal document reproduces the defaults")
{
    const auto s = parse_scenario(minimal());
    CHECK(s.array == default_scenario().array);
    CHECK(s.expanded == default_scenario().expanded);
}

TEST_CASE("array kinds")
{
    auto doc = minimal();
    doc["array"] = json::parse(R"({"kind": "phased", "n_elements": 5, "carrier_hz": 1e10, "spacing_m": 0.015,
                                   "steer_deg": 30, "envelope": {"type": "gaussian", "fdhm_s": 1e-6}})");
    const auto phased = parse_scenario(doc);
    CHECK(phased.array == make_steered_phased_array(5, 0.015, 1e10, pi / 6, GaussianPulse{1e-6, 0.0}));

    doc["array"] = json::parse(R"({"kind": "explicit", "carrier_hz": 2e9, "spacing_m": 0.05, "elements": [
        {"amplitude": 0.5, "phase_rad": 1.0, "freq_offset_hz": 100},
        {"envelope": {"type": "switch", "period_s": 1e-3, "duty": 0.25, "offset_s": 1e-4}},
        {"envelope": {"type": "rect", "duration_s": 2e-6, "start_s": -1e-6}}]})");
    const auto explicit_array = parse_scenario(doc).array;
    CHECK(explicit_array.n_elements == 3);
    CHECK(explicit_array.elements[0].amplitude == 0.5);
    CHECK(explicit_array.elements[0].freq_offset == 100.0);
    CHECK(explicit_array.elements[1].envelope == EnvelopeSpec{PeriodicSwitch{1e-3, 0.25, 1e-4}});
    CHECK(explicit_array.elements[2].envelope == EnvelopeSpec{RectPulse{2e-6, -1e-6}});
}

TEST_CASE("expanded configuration round-trips")
{
    auto doc = minimal();
    doc["array"]["envelope"] = {{"type", "gaussian"}, {"fdhm_s", 3e-6}, {"center_s", 1e-6}};
    doc["model"] = "exact";
    doc["grid"] = {{"range_m", {{"min", 100}, {"max", 200}, {"step", 5}}}, {"angle_deg", {{"values", {-10, 0, 10}}}},
                   {"time_s", 1e-6}};
    doc["options"] = {{"offset_aperture_coupling", false}, {"spreading_reference_m", 1000}};
    const auto s = parse_scenario(doc);
    const auto again = parse_scenario(s.expanded);
    CHECK(again.array == s.array);
    CHECK(again.grid == s.grid);
    CHECK(again.options == s.options);
    CHECK(again.model == DelayModel::ExactSpherical);
    CHECK(again.expanded == s.expanded);
}

TEST_CASE("configuration errors name the offending field")
{
    auto doc = minimal();
    doc["array"].erase("carrier_hz");
    CHECK(diagnostics_of(doc).find("array.carrier_hz") != std::string::npos);

    doc = minimal();
    doc.erase("schema");
    CHECK(diagnostics_of(doc).find("schema") != std::string::npos);

    doc = minimal();
    doc["colour"] = 1;
    CHECK(diagnostics_of(doc).find("colour") != std::string::npos);

    doc = minimal();
    doc["array"]["n_elements"] = -3;
    CHECK(diagnostics_of(doc).find("array.n_elements") != std::string::npos);

    doc = minimal();
    doc["array"]["envelope"] = {{"type", "gaussian"}, {"fdhm_s", -1.0}};
    CHECK(diagnostics_of(doc).find("fdhm") != std::string::npos);

    doc = minimal();
    doc["model"] = "nearfield";
    CHECK(diagnostics_of(doc).find("model") != std::string::npos);

    doc = minimal();
    doc["grid"] = {{"range_m", {{"values", {3, 2}}}}};
    CHECK(diagnostics_of(doc).find("grid") != std::string::npos);

    // several problems are reported together
    doc = minimal();
    doc["array"].erase("carrier_hz");
    doc["model"] = "nearfield";
    CHECK_THROWS_AS(parse_scenario(doc), ConfigError);
    try
    {
        parse_scenario(doc);
    }
    catch (const ConfigError &e)
    {
        CHECK(e.diagnostics().size() >= 2);
    }
}

TEST_CASE("invariance samples sit on exact lattices")
{
    std::mt19937_64 rng(1);
    const InvarianceSettings settings;
    const auto draw = draw_invariance_samples(rng, settings);
    CHECK(draw.samples.size() == settings.sample_count);
    CHECK(draw.dts.size() == settings.dt_count);
    for (double dt : draw.dts)
    {
        CHECK(std::abs(dt) <= settings.dt_max);
        for (const auto &s : draw.samples)
        {
            const double r = s.point.range, t = s.time;
            CHECK(to_lattice(r, 30) == r);
            CHECK((r + speed_of_light * dt) - r == speed_of_light * dt);
            CHECK((t + dt) - t == dt);
        }
    }

    std::mt19937_64 a(42), b(42);
    const auto da = draw_invariance_samples(a, settings), db = draw_invariance_samples(b, settings);
    CHECK(da.dts == db.dts);
    CHECK(da.samples.back().point == db.samples.back().point);
    std::mt19937_64 r(3);
    for (int i = 0; i < 1000; ++i)
    {
        const double v = uniform(r, -2.0, 5.0);
        CHECK((v >= -2.0 && v < 5.0));
    }
}

TEST_CASE("doubling the pulse FDHM doubles the range FWHM")
{
    auto s = default_scenario();
    s.fig1.fdhm = 33.4e-6;
    s.fig1.window_center = 25000.0;
    s.fig1.window_width = 40000.0;
    s.fig1.bce_widths = {5000.0};
    s.fig1.bce_time_offsets = {0.0};
    const auto result = run_compare_fig1(s);
    const double fwhm = result.summary[1].fwhm;
    CHECK(fwhm == doctest::Approx(10013.07).epsilon(5e-3));
    CHECK(std::abs(fwhm - speed_of_light * 33.4e-6) <= 5e-3 * speed_of_light * 33.4e-6);
    CHECK_FALSE(result.summary[1].sidelobe_db.has_value());
}

TEST_CASE("default figure comparison")
{
    const auto result = run_compare_fig1(default_scenario());
    REQUIRE(result.summary.size() == 3);
    const auto &fda = result.summary[0], &gaussian = result.summary[1], &rect = result.summary[2];
    CHECK(std::abs(gaussian.fwhm / (speed_of_light * 16.7e-6) - 1.0) <= 5e-3);
    CHECK_FALSE(gaussian.sidelobe_db.has_value());
    REQUIRE(fda.sidelobe_db.has_value());
    CHECK(std::abs(*fda.sidelobe_db + 13.1) <= 0.3);
    CHECK(std::abs(rect.fwhm - speed_of_light * 16.7e-6) <= result.range_axis[1] - result.range_axis[0]);
    for (const auto &p : result.summary)
    {
        CHECK((p.bce_box > 0.0 && p.bce_box <= 1.0));
        CHECK((p.bce_fwhm_target > 0.0 && p.bce_fwhm_target <= 1.0));
    }
    CHECK(result.fda.size() == result.range_axis.size());
    CHECK(*std::max_element(result.gaussian.begin(), result.gaussian.end()) == 1.0);
    // BCE over nested centered widths never decreases
    for (std::size_t i = 1; i < result.by_width.parameter.size(); ++i)
        CHECK(result.by_width.gaussian[i] >= result.by_width.gaussian[i - 1]);
}

TEST_CASE("Gaussian pulse concentrates more energy than an FDA with matched range width")
{
    // offset tuned so that the FDA range main lobe has the Gaussian FWHM
    auto s = default_scenario();
    s.fig1.bce_widths = {5000.0};
    s.fig1.bce_time_offsets = {0.0};
    const double target = speed_of_light * 16.7e-6;
    double lo = 1e3, hi = 1e5;
    for (int i = 0; i < 40; ++i)
    {
        const double mid = std::sqrt(lo * hi);
        s.array = make_linear_fda(19, wavelength(1e10) / 2, 1e10, mid);
        s.fig1.window_width = 6 * target;
        s.fig1.window_center = 4 * target;
        const double width = fwhm_range(evaluate_cube(s.array, {uniform_axis(s.fig1.window_center - 3 * target,
                                                                             s.fig1.window_center + 3 * target, 5.0),
                                                                {0.0},
                                                                {s.fig1.window_center / speed_of_light}},
                                                      DelayModel::FarField),
                                        0, 0);
        (width > target ? lo : hi) = mid;
    }
    const auto result = run_compare_fig1(s);
    CHECK(std::abs(result.summary[0].fwhm / target - 1.0) <= 1e-2);
    CHECK(result.summary[1].bce_box > result.summary[0].bce_box);
}

TEST_CASE("invariance verdicts")
{
    auto s = default_scenario();
    s.invariance.sample_count = 200;
    const auto fda = run_check_invariance(s);
    CHECK(fda.exit_code == 0);
    CHECK(fda.report.max_relative_deviation <= 1e-12);
    CHECK(fda.probe.swing_db > 3.0);

    auto phased = s;
    phased.array = make_steered_phased_array(19, wavelength(1e10) / 2, 1e10, 0.0);
    const auto cw = run_check_invariance(phased);
    CHECK(cw.exit_code == 4);
    CHECK(cw.probe.swing_db == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));

    auto exact = s;
    exact.model = DelayModel::ExactSpherical;
    const auto near = run_check_invariance(exact);
    CHECK(near.exit_code == 0);
    CHECK(near.report.max_relative_deviation > 0.0);
    CHECK(near.criterion == "near_field_budget");
    CHECK(near.checked_value <= near.tolerance);
}

TEST_CASE("duty-cycled FDA angle drift grows with pulse duration")
{
    auto s = default_scenario();
    s.track.sweep.enabled = true;
    const auto rows = run_duration_sweep(s);
    REQUIRE(rows.size() == s.track.sweep.durations.size());
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].angle_drift >= rows[i - 1].angle_drift);
    CHECK(rows.back().angle_drift > rows.front().angle_drift);
}

TEST_CASE("default peak track moves at the speed of light")
{
    const auto run = run_track_peak(default_scenario());
    CHECK(std::abs(run.track.fitted_speed / speed_of_light - 1.0) <= 1e-3);
    CHECK(run.sweep.empty());
}

TEST_CASE("shipped example configurations load and round-trip")
{
    std::size_t count = 0;
    for (const auto &entry : std::filesystem::directory_iterator(FDABEAM_CONFIG_DIR))
    {
        if (entry.path().extension() != ".json")
            continue;
        CAPTURE(entry.path().string());
        const auto s = load_scenario(entry.path());
        CHECK(parse_scenario(s.expanded).expanded == s.expanded);
        ++count;
    }
    CHECK(count >= 4);
}

TEST_CASE("angles in radians are taken exactly")
{
    auto doc = minimal();
    doc["grid"] = {{"angle_rad", {0.1, 0.2}}};
    CHECK(parse_scenario(doc).grid.angle_axis == std::vector<double>{0.1, 0.2});
    doc["grid"]["angle_deg"] = 3;
    CHECK(diagnostics_of(doc).find("grid.angle_rad") != std::string::npos);
}
