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

#include "fdabeam/field.hpp"
#include "fdabeam/constants.hpp"
#include "fdabeam/hash.hpp"

#include <cmath>
#include <string>

namespace fdabeam
{
    const char *to_string(DelayModel model)
    {
        return model == DelayModel::FarField ? "farfield" : "exact";
    }

    namespace detail
    {
        namespace
        {
            // Knuth two-sum: a + b == s + e exactly
            inline void two_sum(double a, double b, double &s, double &e) noexcept
            {
                s = a + b;
                const double bb = s - a;
                e = (a - (s - bb)) + (b - bb);
            }
        }

        RetardedTime retarded_time(double t, double range) noexcept
        {
            const double q = range / speed_of_light;
            const double q_lo = std::fma(-q, speed_of_light, range) / speed_of_light;
            double s, e;
            two_sum(t, -q, s, e);
            e -= q_lo;
            RetardedTime out;
            out.hi = s + e;
            out.lo = e - (out.hi - s);
            return out;
        }

        double fractional_cycles(double frequency, const RetardedTime &time) noexcept
        {
            const double p = frequency * time.hi;
            const double p_err = std::fma(frequency, time.hi, -p);
            double cycles = (p - std::nearbyint(p)) + (p_err + frequency * time.lo);
            return cycles - std::nearbyint(cycles);
        }

        double path_difference(double range, double sin_angle, double x, DelayModel model) noexcept
        {
            if (model == DelayModel::FarField)
                return x * sin_angle;
            if (x == 0.0)
                return 0.0;
            // r - r_n = (2 r x s - x^2) / (r + r_n), with r_n^2 = (r - x s)^2 + x^2 (1 - s^2)
            const double along = range - x * sin_angle;
            const double across2 = x * x * (1.0 - sin_angle * sin_angle);
            const double r_n = std::sqrt(along * along + across2);
            return x * (2.0 * range * sin_angle - x) / (range + r_n);
        }

        void check_point(const ObservationPoint &point)
        {
            if (!(std::isfinite(point.range) && point.range >= 0.0))
                throw DomainError("observation range must be finite and >= 0, got " + format_double(point.range));
            if (!(std::isfinite(point.angle) && std::abs(point.angle) < pi / 2.0))
                throw DomainError("observation angle must lie strictly inside (-pi/2, pi/2), got " +
                                  format_double(point.angle));
        }
    }

    namespace
    {
        [[noreturn]] void throw_far_field_range(double range_n)
        {
            throw DomainError("far-field element range " + format_double(range_n) +
                              " m is not positive (point inside or behind the aperture); use the exact model");
        }
    }

    double element_range(const ObservationPoint &point, std::size_t element_index, const ArrayConfig &config,
                         DelayModel model)
    {
        detail::check_point(point);
        if (element_index >= config.n_elements)
            throw ValidationError("element_index", "element_index must be < n_elements");
        const double x = config.position(element_index);
        const double s = std::sin(point.angle);
        if (model == DelayModel::FarField)
        {
            const double r_n = point.range - x * s;
            if (!(r_n > 0.0))
                throw_far_field_range(r_n);
            return r_n;
        }
        const double along = point.range - x * s;
        return std::sqrt(along * along + x * x * (1.0 - s * s));
    }

    FieldKernel::FieldKernel(ArrayConfig config, DelayModel model, FieldOptions options)
        : config_(std::move(config)), model_(model), options_(options)
    {
        require_valid(config_);
        if (options_.spreading_reference && !(*options_.spreading_reference > 0.0))
            throw ValidationError("spreading_reference", "spreading_reference must be > 0");
        positions_.resize(config_.n_elements);
        for (std::size_t n = 0; n < config_.n_elements; ++n)
            positions_[n] = config_.position(n);
        carrier_per_c_ = config_.carrier / speed_of_light;
    }

    void FieldKernel::check(const ObservationPoint &point) const
    {
        detail::check_point(point);
        if (model_ == DelayModel::FarField)
        {
            const double s = std::sin(point.angle);
            const double nearest = point.range - (s > 0.0 ? positions_.back() * s : 0.0);
            if (!(nearest > 0.0))
                throw_far_field_range(nearest);
        }
        else if (options_.spreading_reference)
        {
            for (std::size_t n = 0; n < positions_.size(); ++n)
                if (!(point.range - detail::path_difference(point.range, std::sin(point.angle), positions_[n],
                                                            model_) > 0.0))
                    throw DomainError("observation point coincides with an element; 1/r spreading undefined");
        }
    }

    std::complex<double> FieldKernel::referenced_sum(const ObservationPoint &point, double t) const
    {
        check(point);
        return referenced_sum_unchecked(point, t);
    }

    std::complex<double> FieldKernel::referenced_sum_unchecked(const ObservationPoint &point, double t) const noexcept
    {
        const double s = std::sin(point.angle);
        const auto u = detail::retarded_time(t, point.range);

        std::complex<double> sum = 0.0;
        for (std::size_t n = 0; n < positions_.size(); ++n)
        {
            const auto &e = config_.elements[n];
            const double delta = detail::path_difference(point.range, s, positions_[n], model_);
            const double delay = delta / speed_of_light;

            double amplitude = e.amplitude;
            if (options_.spreading_reference)
                amplitude *= *options_.spreading_reference / (point.range - delta);

            const double g = detail::envelope_value_unchecked(e.envelope, u.hi + (u.lo + delay));
            if (amplitude * g == 0.0)
                continue;

            double carrier_cycles = delta * carrier_per_c_;
            carrier_cycles -= std::nearbyint(carrier_cycles);

            double offset_cycles = 0.0;
            if (e.freq_offset != 0.0)
            {
                offset_cycles = detail::fractional_cycles(e.freq_offset, u);
                if (options_.offset_aperture_coupling)
                    offset_cycles += e.freq_offset * delay;
            }

            const double phase = two_pi * (carrier_cycles + offset_cycles) + e.phase;
            sum += amplitude * g * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        return sum;
    }

    std::complex<double> FieldKernel::field(const ObservationPoint &point, double t) const
    {
        const auto sum = referenced_sum(point, t);
        const double carrier_phase = two_pi * detail::fractional_cycles(config_.carrier, detail::retarded_time(t, point.range));
        return sum * std::complex<double>(std::cos(carrier_phase), std::sin(carrier_phase));
    }

    std::complex<double> instantaneous_field(const ArrayConfig &config, const ObservationPoint &point, double t,
                                             DelayModel model, const FieldOptions &options)
    {
        return FieldKernel(config, model, options).field(point, t);
    }

    double instantaneous_magnitude(const ArrayConfig &config, const ObservationPoint &point, double t,
                                   DelayModel model, const FieldOptions &options)
    {
        return FieldKernel(config, model, options).magnitude(point, t);
    }

    double closed_form_fda_magnitude(std::size_t n_elements, double psi)
    {
        // |D(psi)| has unit period; reduce to [-0.5, 0.5] before evaluating
        const double reduced = psi - std::nearbyint(psi);
        if (reduced == 0.0)
            return static_cast<double>(n_elements);
        const double n = static_cast<double>(n_elements);
        return std::abs(std::sin(n * pi * reduced) / std::sin(pi * reduced));
    }

    ObservationPoint shifted_point(const ObservationPoint &point, double dt)
    {
        const double range = point.range + speed_of_light * dt;
        if (!(std::isfinite(range) && range >= 0.0))
            throw DomainError("shifted range " + format_double(range) + " m is negative");
        return {range, point.angle};
    }

    namespace
    {
        void append_envelope(std::string &out, const EnvelopeSpec &env)
        {
            std::visit(
                [&](const auto &v)
                {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, ContinuousWave>)
                        out += "cw";
                    else if constexpr (std::is_same_v<T, GaussianPulse>)
                        out += "gaussian:" + format_double(v.fdhm) + ":" + format_double(v.center);
                    else if constexpr (std::is_same_v<T, RectPulse>)
                        out += "rect:" + format_double(v.duration) + ":" + format_double(v.start);
                    else
                        out += "switch:" + format_double(v.period) + ":" + format_double(v.duty) + ":" +
                               format_double(v.offset);
                },
                env);
        }
    }

    std::string config_digest(const ArrayConfig &config, DelayModel model, const FieldOptions &options)
    {
        std::string text = "fdabeam-array-v1|";
        text += std::to_string(config.n_elements) + "|" + format_double(config.spacing) + "|" +
                format_double(config.carrier) + "|" + to_string(model) + "|" +
                (options.offset_aperture_coupling ? "coupled" : "uncoupled") + "|" +
                (options.spreading_reference ? format_double(*options.spreading_reference) : "nospread");
        for (const auto &e : config.elements)
        {
            text += "|" + format_double(e.amplitude) + "," + format_double(e.phase) + "," +
                    format_double(e.freq_offset) + ",";
            append_envelope(text, e.envelope);
        }
        return to_hex(fnv1a64(text));
    }
}
