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

#pragma once

#include "fdabeam/errors.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace fdabeam
{
    // Unmodulated carrier, envelope = 1 for all t
    struct ContinuousWave
    {
        bool operator==(const ContinuousWave &) const = default;
    };

    // exp(-4 ln2 ((t - center) / fdhm)^2); fdhm is the full duration at half maximum of the magnitude
    struct GaussianPulse
    {
        double fdhm = 1.0;   // [s]
        double center = 0.0; // [s]
        bool operator==(const GaussianPulse &) const = default;
    };

    // 1 on the half-open support [start, start + duration)
    struct RectPulse
    {
        double duration = 1.0; // [s]
        double start = 0.0;    // [s]
        bool operator==(const RectPulse &) const = default;
    };

    // Periodic on/off switching of a time-modulated element: on while frac((t - offset) / period) < duty
    struct PeriodicSwitch
    {
        double period = 1.0; // [s]
        double duty = 1.0;   // (0, 1]
        double offset = 0.0; // [s]
        bool operator==(const PeriodicSwitch &) const = default;
    };

    using EnvelopeSpec = std::variant<ContinuousWave, GaussianPulse, RectPulse, PeriodicSwitch>;

    // Lists violated invariants, prefixing field names with `path`
    std::vector<Violation> envelope_violations(const EnvelopeSpec &spec, std::string_view path = "envelope");

    // Baseband magnitude envelope at time t, in [0, 1]. Throws ValidationError for an invalid spec.
    double envelope_value(const EnvelopeSpec &spec, double t);

    // Largest |dg/dt| of the envelope; 0 for piecewise-constant envelopes (their jumps are not bounded)
    double envelope_max_slope(const EnvelopeSpec &spec);

    namespace detail
    {
        // Same as envelope_value without validation; for inner loops over pre-validated configs
        double envelope_value_unchecked(const EnvelopeSpec &spec, double t) noexcept;
    }
}
