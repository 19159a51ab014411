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

#ifndef RISBEAM_NEARFIELD_PCM_HPP
#define RISBEAM_NEARFIELD_PCM_HPP

#include "risbeam/geometry.hpp"
#include "risbeam/phase_profile.hpp"
#include "risbeam/signal_model.hpp"

#include <vector>

namespace risbeam
{
    // Phase compensation for a feed located in the near field of the array.
    //
    // Paths of length L accumulate exp(-j k0 L), the same convention as the far-field
    // steering vectors. A feed at distance d_i contributes exp(-j k0 d_i); a far-field
    // departure in unit direction u contributes exp(+j k0 p_i^T u). The compensation
    // profile below cancels both, so every element adds in phase.

    struct FeedAntenna
    {
        Vec3 phase_center = Vec3::Zero();
    };

    struct NearFieldOptions
    {
        // Scale each element's contribution by 1/d_i (feed path) and 1/r_i (probe path).
        bool amplitude_taper = false;
    };

    // omega_i = k0 * ||feed - p_i||, wrapped to [-pi, pi). Cancels the feed path delay.
    // Throws GeometryError if the feed coincides with an element (distance < 1e-9 m).
    std::vector<double> spatial_delay_phase(const ArrayGeometry &geom, const FeedAntenna &feed,
                                            const Carrier &carrier);

    // omega_i = -k0 * p_i^T u(dep), wrapped. For boards in the z = 0 plane this is
    // -k0 (x_i sin(theta) cos(phi) + y_i sin(theta) sin(phi)).
    std::vector<double> progressive_phase(const ArrayGeometry &geom, const Direction &dep, const Carrier &carrier);

    // w_i = exp(j (spatial delay + progressive phase)) = exp(j k0 (d_i - p_i^T u)).
    PhaseProfile pcm_profile(const ArrayGeometry &geom, const FeedAntenna &feed, const Direction &dep,
                             const Carrier &carrier);

    // Focus on a point instead of a direction: omega_i = k0 (d_i + ||target - p_i||).
    PhaseProfile pcm_focus_profile(const ArrayGeometry &geom, const FeedAntenna &feed, const Vec3 &target,
                                   const Carrier &carrier);

    // sum_i exp(-j k0 d_i) w_i exp(j k0 p_i^T u(dep))
    complex nearfield_array_factor(const ArrayGeometry &geom, const FeedAntenna &feed, const PhaseProfile &w,
                                   const Direction &dep, const Carrier &carrier, const NearFieldOptions &opts = {});

    // sum_i exp(-j k0 d_i) w_i exp(-j k0 r_i), r_i = ||probe - p_i||.
    // Throws GeometryError if the probe coincides with the feed or an element.
    complex nearfield_probe_field(const ArrayGeometry &geom, const FeedAntenna &feed, const PhaseProfile &w,
                                  const Vec3 &probe, const Carrier &carrier, const NearFieldOptions &opts = {});
} // namespace risbeam

#endif
