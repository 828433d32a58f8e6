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

#include "fdabeam/array_config.hpp"
#include "fdabeam/constants.hpp"

#include <cmath>
#include <string>

namespace fdabeam
{
    double ArrayConfig::amplitude_sum() const
    {
        double sum = 0.0;
        for (const auto &e : elements)
            sum += e.amplitude;
        return sum;
    }

    std::vector<Violation> validate(const ArrayConfig &config)
    {
        std::vector<Violation> out;
        if (config.n_elements < 1)
            out.push_back({"n_elements", "n_elements must be >= 1"});
        if (!(std::isfinite(config.spacing) && config.spacing > 0.0))
            out.push_back({"spacing", "spacing must be > 0"});
        const bool carrier_ok = std::isfinite(config.carrier) && config.carrier > 0.0;
        if (!carrier_ok)
            out.push_back({"carrier", "carrier must be > 0"});
        if (config.elements.size() != config.n_elements)
            out.push_back({"elements", "length mismatch: " + std::to_string(config.elements.size()) +
                                           " elements for n_elements = " + std::to_string(config.n_elements)});

        for (std::size_t n = 0; n < config.elements.size(); ++n)
        {
            const auto &e = config.elements[n];
            const std::string path = "elements[" + std::to_string(n) + "]";
            if (!(std::isfinite(e.amplitude) && e.amplitude >= 0.0))
                out.push_back({path + ".amplitude", "amplitude must be finite and >= 0"});
            if (!std::isfinite(e.phase))
                out.push_back({path + ".phase", "phase must be finite"});
            if (!std::isfinite(e.freq_offset))
                out.push_back({path + ".freq_offset", "freq_offset must be finite"});
            else if (carrier_ok && !(std::abs(e.freq_offset) < config.carrier))
                out.push_back({path + ".freq_offset", "|freq_offset| must be < carrier"});
            auto env = envelope_violations(e.envelope, path + ".envelope");
            out.insert(out.end(), env.begin(), env.end());
        }
        return out;
    }

    void require_valid(const ArrayConfig &config) { throw_if_any(validate(config)); }

    ArrayConfig make_linear_fda(std::size_t n, double spacing, double carrier, double delta_f,
                                const EnvelopeSpec &envelope)
    {
        ArrayConfig config{n, spacing, carrier, {}};
        config.elements.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            config.elements.push_back({1.0, 0.0, static_cast<double>(i) * delta_f, envelope});
        require_valid(config);
        return config;
    }

    ArrayConfig make_steered_phased_array(std::size_t n, double spacing, double carrier, double steer_angle,
                                          const EnvelopeSpec &envelope)
    {
        if (!(std::abs(steer_angle) < pi / 2.0))
            throw ValidationError("steer_angle", "|steer_angle| must be < pi/2");

        ArrayConfig config{n, spacing, carrier, {}};
        config.elements.reserve(n);
        const double progression = -two_pi * carrier * spacing * std::sin(steer_angle) / speed_of_light;
        for (std::size_t i = 0; i < n; ++i)
            config.elements.push_back({1.0, static_cast<double>(i) * progression, 0.0, envelope});
        require_valid(config);
        return config;
    }
}
