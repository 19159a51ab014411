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

#include "risbeam/angles.hpp"

#include <cmath>

namespace risbeam
{
    namespace
    {
        double wrap_to(double value, double half_period)
        {
            const double period = 2.0 * half_period;
            double r = value - period * std::floor((value + half_period) / period);
            // floor() can land one ulp short of the upper bound
            if (r >= half_period)
                r -= period;
            if (r < -half_period)
                r = -half_period;
            return r;
        }
    } // namespace

    double wrap_phase(double rad) { return wrap_to(rad, pi); }

    double wrap_degrees(double deg) { return wrap_to(deg, 180.0); }

    double angular_distance_deg(double a_deg, double b_deg)
    {
        return std::abs(wrap_degrees(a_deg - b_deg));
    }
} // namespace risbeam
