// SPDX-License-Identifier: Apache-2.0
//
// risbeam: simulation and phase-configuration toolkit for reconfigurable intelligent surfaces
// Copyright (C) 2026 The risbeam authors
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

#ifndef RISBEAM_ANGLES_HPP
#define RISBEAM_ANGLES_HPP

#include <numbers>

namespace risbeam
{
    inline constexpr double pi = std::numbers::pi;

    constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

    // Wrap to [-pi, pi), lower bound inclusive.
    double wrap_phase(double rad);

    // Wrap to [-180, 180), lower bound inclusive.
    double wrap_degrees(double deg);

    // Smallest absolute angular distance in degrees, in [0, 180].
    double angular_distance_deg(double a_deg, double b_deg);
} // namespace risbeam

#endif
