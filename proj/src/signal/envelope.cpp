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

#include "fdabeam/envelope.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fdabeam
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }
    }

    std::vector<Violation> envelope_violations(const EnvelopeSpec &spec, std::string_view path)
    {
        std::vector<Violation> out;
        const std::string p(path);
        std::visit(overloaded{
                       [](const ContinuousWave &) {},
                       [&](const GaussianPulse &g)
                       {
                           if (!positive_finite(g.fdhm))
                               out.push_back({p + ".fdhm", "fdhm must be > 0"});
                           if (!std::isfinite(g.center))
                               out.push_back({p + ".center", "center must be finite"});
                       },
                       [&](const RectPulse &r)
                       {
                           if (!positive_finite(r.duration))
                               out.push_back({p + ".duration", "duration must be > 0"});
                           if (!std::isfinite(r.start))
                               out.push_back({p + ".start", "start must be finite"});
                       },
                       [&](const PeriodicSwitch &s)
                       {
                           if (!positive_finite(s.period))
                               out.push_back({p + ".period", "period must be > 0"});
                           if (!(s.duty > 0.0 && s.duty <= 1.0))
                               out.push_back({p + ".duty", "duty must be in (0, 1]"});
                           if (!std::isfinite(s.offset))
                               out.push_back({p + ".offset", "offset must be finite"});
                       },
                   },
                   spec);
        return out;
    }

    double envelope_value(const EnvelopeSpec &spec, double t)
    {
        throw_if_any(envelope_violations(spec));
        return detail::envelope_value_unchecked(spec, t);
    }

    double envelope_max_slope(const EnvelopeSpec &spec)
    {
        if (const auto *g = std::get_if<GaussianPulse>(&spec))
        {
            // max of |d/dt exp(-a x^2)| with a = 4 ln2 / fdhm^2 is sqrt(2a / e)
            const double a = 4.0 * std::numbers::ln2 / (g->fdhm * g->fdhm);
            return std::sqrt(2.0 * a / std::numbers::e);
        }
        return 0.0;
    }

    namespace detail
    {
        double envelope_value_unchecked(const EnvelopeSpec &spec, double t) noexcept
        {
            switch (spec.index())
            {
            case 0:
                return 1.0;
            case 1:
            {
                const auto &g = *std::get_if<GaussianPulse>(&spec);
                const double x = (t - g.center) / g.fdhm;
                return std::exp(-4.0 * std::numbers::ln2 * x * x);
            }
            case 2:
            {
                const auto &r = *std::get_if<RectPulse>(&spec);
                return (t >= r.start && t < r.start + r.duration) ? 1.0 : 0.0;
            }
            default:
            {
                const auto &s = *std::get_if<PeriodicSwitch>(&spec);
                const double x = (t - s.offset) / s.period;
                double frac = x - std::floor(x);
                if (frac >= 1.0) // x slightly below an integer can round up
                    frac = 0.0;
                return frac < s.duty ? 1.0 : 0.0;
            }
            }
        }
    }
}
