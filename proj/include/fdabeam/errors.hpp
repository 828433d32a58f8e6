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

#include <stdexcept>
#include <string>
#include <vector>

namespace fdabeam
{
    // A single violated invariant, addressed by its field path (e.g. "elements[3].amplitude")
    struct Violation
    {
        std::string field;
        std::string message;

        bool operator==(const Violation &) const = default;
    };

    // Invalid input value (array configuration, envelope, grid, region)
    class ValidationError : public std::invalid_argument
    {
    public:
        explicit ValidationError(std::vector<Violation> violations);
        ValidationError(std::string field, std::string message);
        const std::vector<Violation> &violations() const noexcept { return violations_; }

    private:
        std::vector<Violation> violations_;
    };

    // Valid inputs that the requested model cannot evaluate (e.g. observation point behind the aperture)
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A pattern measurement could not be taken (grid too narrow, peak at boundary, all-zero slice)
    class MeasurementError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Throws ValidationError if the list is non-empty
    void throw_if_any(std::vector<Violation> violations);
}
