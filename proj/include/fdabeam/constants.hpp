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

#include <numbers>

namespace fdabeam
{
    // Speed of light in vacuum [m/s], exact by SI definition
    inline constexpr double speed_of_light = 299792458.0;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    inline constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

    // Free-space wavelength [m] at the given frequency [Hz]
    inline constexpr double wavelength(double frequency) { return speed_of_light / frequency; }
}
