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

#include "fdabeam/array_config.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fdabeam
{
    struct ObservationPoint
    {
        double range = 0.0; // [m], >= 0
        double angle = 0.0; // [rad] from broadside, strictly inside (-pi/2, pi/2)

        bool operator==(const ObservationPoint &) const = default;
    };

    enum class DelayModel
    {
        FarField,      // r_n = r - x_n sin(theta), parallel rays
        ExactSpherical // r_n = |observation - element|
    };

    const char *to_string(DelayModel model);

    struct FieldOptions
    {
        // Keep the 2 pi dF_n x_n sin(theta) / c phase of each element. Disabling it turns a
        // uniform CW FDA into an exact Dirichlet kernel (used for oracle comparisons only).
        bool offset_aperture_coupling = true;

        // If set, element amplitudes are scaled by spreading_reference / r_n [m]
        std::optional<double> spreading_reference;

        bool operator==(const FieldOptions &) const = default;
    };

    // Distance from element `element_index` to the observation point under `model`.
    // Throws DomainError if the far-field range is not positive or the point is invalid.
    double element_range(const ObservationPoint &point, std::size_t element_index, const ArrayConfig &config,
                         DelayModel model);

    // RF field sum_n a_n g_n(t - r_n/c) exp(j (2 pi (f0 + dF_n)(t - r_n/c) + phi_n)), summed in ascending n
    std::complex<double> instantaneous_field(const ArrayConfig &config, const ObservationPoint &point, double t,
                                             DelayModel model, const FieldOptions &options = {});

    // |instantaneous_field|, computed with the common carrier phase factored out
    double instantaneous_magnitude(const ArrayConfig &config, const ObservationPoint &point, double t,
                                   DelayModel model, const FieldOptions &options = {});

    // |sin(N pi psi) / sin(pi psi)|, N at integer psi
    double closed_form_fda_magnitude(std::size_t n_elements, double psi);

    // (range + c dt, angle); throws DomainError if the shifted range is negative
    ObservationPoint shifted_point(const ObservationPoint &point, double dt);

    // Stable identifier of (config, model, options); FNV-1a 64 over a canonical text dump
    std::string config_digest(const ArrayConfig &config, DelayModel model, const FieldOptions &options = {});

    // Evaluates one validated configuration at many points. Immutable and shareable across threads.
    class FieldKernel
    {
    public:
        FieldKernel(ArrayConfig config, DelayModel model, FieldOptions options = {});

        // Throws DomainError if the point cannot be evaluated under this model
        void check(const ObservationPoint &point) const;

        // Element sum with the reference carrier phase exp(j 2 pi f0 (t - r/c)) removed
        std::complex<double> referenced_sum(const ObservationPoint &point, double t) const;
        std::complex<double> field(const ObservationPoint &point, double t) const;
        // referenced_sum for a point that already passed check()
        std::complex<double> referenced_sum_unchecked(const ObservationPoint &point, double t) const noexcept;
        double magnitude(const ObservationPoint &point, double t) const { return std::abs(referenced_sum(point, t)); }

        const ArrayConfig &config() const { return config_; }
        DelayModel model() const { return model_; }
        const FieldOptions &options() const { return options_; }

    private:
        ArrayConfig config_;
        DelayModel model_;
        FieldOptions options_;
        std::vector<double> positions_;
        double carrier_per_c_; // f0 / c [1/m]
    };

    namespace detail
    {
        // t - r / c as an unevaluated sum hi + lo
        struct RetardedTime
        {
            double hi = 0.0;
            double lo = 0.0;
        };
        RetardedTime retarded_time(double t, double range) noexcept;

        // Fractional part of frequency * (hi + lo), in [-0.5, 0.5]
        double fractional_cycles(double frequency, const RetardedTime &time) noexcept;

        // r - r_n for the element at axial position x; stable for x << r
        double path_difference(double range, double sin_angle, double x, DelayModel model) noexcept;

        void check_point(const ObservationPoint &point);
    }
}
