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

#include "fdabeam/envelope.hpp"
#include "fdabeam/errors.hpp"

#include <cstddef>
#include <vector>

namespace fdabeam
{
    // Excitation of one isotropic element
    struct ElementExcitation
    {
        double amplitude = 1.0;   // linear, >= 0
        double phase = 0.0;       // [rad]
        double freq_offset = 0.0; // [Hz], added to the carrier
        EnvelopeSpec envelope = ContinuousWave{};

        bool operator==(const ElementExcitation &) const = default;
    };

    // Uniform linear array along the x axis; element n sits at x_n = n * spacing, n = 0 ... N-1.
    // Angles are measured from broadside.
    struct ArrayConfig
    {
        std::size_t n_elements = 0;
        double spacing = 0.0; // [m]
        double carrier = 0.0; // [Hz]
        std::vector<ElementExcitation> elements;

        double position(std::size_t n) const { return static_cast<double>(n) * spacing; }
        double aperture() const { return n_elements > 0 ? position(n_elements - 1) : 0.0; }
        double amplitude_sum() const;

        bool operator==(const ArrayConfig &) const = default;
    };

    // Every violated invariant with its field path; empty means valid
    std::vector<Violation> validate(const ArrayConfig &config);

    // Throws ValidationError listing all violations
    void require_valid(const ArrayConfig &config);

    // Linear-offset FDA: element n radiates at carrier + n * delta_f with unit amplitude and zero phase
    ArrayConfig make_linear_fda(std::size_t n, double spacing, double carrier, double delta_f,
                                const EnvelopeSpec &envelope = ContinuousWave{});

    // Conventional phased array steered to `steer_angle` [rad]; all elements on the carrier
    ArrayConfig make_steered_phased_array(std::size_t n, double spacing, double carrier, double steer_angle,
                                          const EnvelopeSpec &envelope = ContinuousWave{});
}
