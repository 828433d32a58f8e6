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

#include "fdabeam/array_config.hpp"
#include "fdabeam/constants.hpp"

#include <cmath>
#include <random>

using namespace fdabeam;

TEST_CASE("envelope examples")
{
    const GaussianPulse g{16.7e-6, 0.0};
    CHECK(envelope_value(g, 0.0) == 1.0);
    CHECK(envelope_value(g, 8.35e-6) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(envelope_value(RectPulse{1e-6, 0.0}, 1e-6) == 0.0);
    CHECK(envelope_value(RectPulse{1e-6, 0.0}, 0.0) == 1.0);
    CHECK(envelope_value(PeriodicSwitch{1e-3, 0.25, 0.0}, 0.3e-3) == 0.0);
    CHECK(envelope_value(PeriodicSwitch{1e-3, 0.25, 0.0}, 0.2e-3) == 1.0);
    CHECK(envelope_value(PeriodicSwitch{1e-3, 0.25, 0.0}, -0.9e-3) == 1.0);
    CHECK(envelope_value(ContinuousWave{}, -123.0) == 1.0);
}

TEST_CASE("invalid envelopes are rejected")
{
    CHECK_THROWS_AS(envelope_value(GaussianPulse{0.0, 0.0}, 0.0), ValidationError);
    CHECK_THROWS_AS(envelope_value(RectPulse{-1.0, 0.0}, 0.0), ValidationError);
    CHECK_THROWS_AS(envelope_value(PeriodicSwitch{0.0, 0.5, 0.0}, 0.0), ValidationError);
    CHECK_THROWS_AS(envelope_value(PeriodicSwitch{1.0, 0.0, 0.0}, 0.0), ValidationError);
    CHECK_THROWS_AS(envelope_value(PeriodicSwitch{1.0, 1.5, 0.0}, 0.0), ValidationError);
    CHECK_NOTHROW(envelope_value(PeriodicSwitch{1.0, 1.0, 0.0}, 0.3));
    CHECK(envelope_violations(GaussianPulse{-1.0, 0.0}, "el")[0].field == "el.fdhm");
}

TEST_CASE("envelope value stays in [0, 1] and the switch is periodic")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i)
    {
        const double scale = 1e-6 + 1e-3 * u(rng);
        const EnvelopeSpec specs[] = {GaussianPulse{scale, u(rng) * 1e-3}, RectPulse{scale, u(rng) * 1e-3},
                                      PeriodicSwitch{scale, 0.01 + 0.99 * u(rng), u(rng) * 1e-4}, ContinuousWave{}};
        const double t = -1e-2 + 2e-2 * u(rng);
        for (const auto &s : specs)
        {
            const double v = envelope_value(s, t);
            CHECK((v >= 0.0 && v <= 1.0));
        }

        const PeriodicSwitch sw{1e-3, 0.01 + 0.98 * u(rng), 1e-4 * u(rng)};
        const long k = static_cast<long>(rng() % 201) - 100;
        CHECK(envelope_value(sw, t) == envelope_value(sw, t + static_cast<double>(k) * sw.period));
    }
}

TEST_CASE("Gaussian is at half maximum a half FDHM away from its center")
{
    for (double fdhm : {1e-9, 1e-6, 16.7e-6, 1e-3})
        for (double center : {0.0, 3 * fdhm, -7.5 * fdhm})
        {
            CHECK(envelope_value(GaussianPulse{fdhm, center}, center + fdhm / 2) == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(envelope_value(GaussianPulse{fdhm, center}, center - fdhm / 2) == doctest::Approx(0.5).epsilon(1e-12));
        }
}

TEST_CASE("make_linear_fda")
{
    const auto fda = make_linear_fda(19, 0.015, 1e10, 1e4);
    CHECK(fda.n_elements == 19);
    REQUIRE(fda.elements.size() == 19);
    for (std::size_t n = 0; n < 19; ++n)
    {
        CHECK(fda.elements[n].freq_offset == static_cast<double>(n) * 1e4);
        CHECK(fda.elements[n].amplitude == 1.0);
        CHECK(fda.elements[n].phase == 0.0);
    }
    CHECK(fda.elements.back().freq_offset == 180e3);

    const auto single = make_linear_fda(1, 0.015, 1e10, 1e4);
    CHECK(single.elements.at(0).freq_offset == 0.0);

    const auto plain = make_linear_fda(3, 0.01, 1e9, 0.0);
    for (const auto &e : plain.elements)
        CHECK(e.freq_offset == 0.0);

    CHECK_THROWS_AS(make_linear_fda(0, 0.015, 1e10, 1e4), ValidationError);
    CHECK_THROWS_AS(make_linear_fda(4, -0.015, 1e10, 1e4), ValidationError);
    CHECK_THROWS_AS(make_linear_fda(4, 0.015, 0.0, 1e4), ValidationError);
    // offsets must stay below the carrier
    CHECK_THROWS_AS(make_linear_fda(4, 0.015, 1e4, 1e4), ValidationError);
}

TEST_CASE("make_steered_phased_array")
{
    const double f0 = 1e10;
    const double half = wavelength(f0) / 2;
    const auto broadside = make_steered_phased_array(19, half, f0, 0.0, GaussianPulse{16.7e-6, 0.0});
    for (const auto &e : broadside.elements)
    {
        CHECK(e.phase == 0.0);
        CHECK(e.freq_offset == 0.0);
        CHECK(e.envelope == EnvelopeSpec{GaussianPulse{16.7e-6, 0.0}});
    }

    const auto steered = make_steered_phased_array(5, half, f0, pi / 6, ContinuousWave{});
    CHECK(steered.elements[1].phase == doctest::Approx(-pi / 2).epsilon(1e-14));
    CHECK(steered.elements[4].phase == doctest::Approx(-2 * pi).epsilon(1e-14));

    CHECK_THROWS_AS(make_steered_phased_array(5, half, f0, pi / 2, ContinuousWave{}), ValidationError);
}

TEST_CASE("zero-offset FDA and unsteered phased array are the same configuration")
{
    for (std::size_t n : {1u, 2u, 19u, 64u})
        for (const EnvelopeSpec &env : {EnvelopeSpec{ContinuousWave{}}, EnvelopeSpec{GaussianPulse{1e-6, 0.0}},
                                        EnvelopeSpec{RectPulse{2e-6, -1e-6}}})
            CHECK(make_linear_fda(n, 0.02, 3e9, 0.0, env) == make_steered_phased_array(n, 0.02, 3e9, 0.0, env));
}

TEST_CASE("validate reports every violation with its field path")
{
    auto config = make_linear_fda(19, 0.015, 1e10, 1e4);
    CHECK(validate(config).empty());

    auto bad_spacing = config;
    bad_spacing.spacing = 0.0;
    const auto v1 = validate(bad_spacing);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].field == "spacing");
    CHECK(v1[0].message == "spacing must be > 0");

    auto short_list = config;
    short_list.elements.pop_back();
    const auto v2 = validate(short_list);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].message.find("length mismatch") != std::string::npos);

    auto several = config;
    several.carrier = -1.0;
    several.elements[3].amplitude = -2.0;
    several.elements[5].envelope = GaussianPulse{0.0, 0.0};
    const auto v3 = validate(several);
    REQUIRE(v3.size() == 3);
    CHECK(v3[0].field == "carrier");
    CHECK(v3[1].field == "elements[3].amplitude");
    CHECK(v3[2].field == "elements[5].envelope.fdhm");

    CHECK_THROWS_AS(require_valid(several), ValidationError);
}
