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

#include "fdabeam/errors.hpp"

namespace fdabeam
{
    namespace
    {
        std::string join(const std::vector<Violation> &violations)
        {
            std::string out;
            for (const auto &v : violations)
            {
                if (!out.empty())
                    out += "; ";
                out += v.field + ": " + v.message;
            }
            return out.empty() ? "invalid value" : out;
        }
    }

    ValidationError::ValidationError(std::vector<Violation> violations)
        : std::invalid_argument(join(violations)), violations_(std::move(violations))
    {
    }

    ValidationError::ValidationError(std::string field, std::string message)
        : ValidationError(std::vector<Violation>{{std::move(field), std::move(message)}})
    {
    }

    void throw_if_any(std::vector<Violation> violations)
    {
        if (!violations.empty())
            throw ValidationError(std::move(violations));
    }
}
