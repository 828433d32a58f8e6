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

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace fdabeam
{
    inline constexpr std::uint64_t fnv1a64_offset = 0xcbf29ce484222325ULL;

    inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash = fnv1a64_offset)
    {
        for (unsigned char ch : data)
        {
            hash ^= ch;
            hash *= 0x100000001b3ULL;
        }
        return hash;
    }

    inline std::string to_hex(std::uint64_t value)
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
        return buf;
    }

    // Shortest text that round-trips a double exactly
    inline std::string format_double(double value)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        return buf;
    }
}
