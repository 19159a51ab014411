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

#include "risbeam/nearfield_pcm.hpp"

#include "risbeam/angles.hpp"
#include "risbeam/errors.hpp"

#include <cmath>
#include <string>

namespace risbeam
{
    namespace
    {
        constexpr double coincidence_tol = 1e-9; // m

        double checked_distance(const Vec3 &a, const Vec3 &b, std::size_t element, const char *what)
        {
            const double d = (a - b).norm();
            if (!(d >= coincidence_tol))
                throw GeometryError(std::string(what) + " coincides with element " + std::to_string(element));
            return d;
        }
    } // namespace

    std::vector<double> spatial_delay_phase(const ArrayGeometry &geom, const FeedAntenna &feed,
                                            const Carrier &carrier)
    {
        const double k = carrier.wavenumber();
        std::vector<double> out(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
            out[i] = wrap_phase(k * checked_distance(feed.phase_center, geom.position(i), i, "feed"));
        return out;
    }

    std::vector<double> progressive_phase(const ArrayGeometry &geom, const Direction &dep, const Carrier &carrier)
    {
        const double k = carrier.wavenumber();
        const Vec3 u = direction_vector(dep);
        std::vector<double> out(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
            out[i] = wrap_phase(-k * geom.position(i).dot(u));
        return out;
    }

    PhaseProfile pcm_profile(const ArrayGeometry &geom, const FeedAntenna &feed, const Direction &dep,
                             const Carrier &carrier)
    {
        const double k = carrier.wavenumber();
        const Vec3 u = direction_vector(dep);
        std::vector<double> omega(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
        {
            const Vec3 &p = geom.position(i);
            const double d = checked_distance(feed.phase_center, p, i, "feed");
            omega[i] = wrap_phase(k * (d - p.dot(u)));
        }
        return PhaseProfile::from_phases(omega);
    }

    PhaseProfile pcm_focus_profile(const ArrayGeometry &geom, const FeedAntenna &feed, const Vec3 &target,
                                   const Carrier &carrier)
    {
        const double k = carrier.wavenumber();
        std::vector<double> omega(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
        {
            const Vec3 &p = geom.position(i);
            const double d = checked_distance(feed.phase_center, p, i, "feed");
            const double r = checked_distance(target, p, i, "focus target");
            omega[i] = wrap_phase(k * (d + r));
        }
        return PhaseProfile::from_phases(omega);
    }

    complex nearfield_array_factor(const ArrayGeometry &geom, const FeedAntenna &feed, const PhaseProfile &w,
                                   const Direction &dep, const Carrier &carrier, const NearFieldOptions &opts)
    {
        if (w.size() != geom.size())
            throw DimensionError("nearfield_array_factor: profile size does not match geometry");
        const double k = carrier.wavenumber();
        const Vec3 u = direction_vector(dep);
        complex sum{0.0, 0.0};
        for (std::size_t i = 0; i < geom.size(); ++i)
        {
            const Vec3 &p = geom.position(i);
            const double d = checked_distance(feed.phase_center, p, i, "feed");
            const double amp = opts.amplitude_taper ? 1.0 / d : 1.0;
            sum += amp * std::polar(1.0, -k * (d - p.dot(u))) * w.entries()[Eigen::Index(i)];
        }
        return sum;
    }

    complex nearfield_probe_field(const ArrayGeometry &geom, const FeedAntenna &feed, const PhaseProfile &w,
                                  const Vec3 &probe, const Carrier &carrier, const NearFieldOptions &opts)
    {
        if (w.size() != geom.size())
            throw DimensionError("nearfield_probe_field: profile size does not match geometry");
        if ((probe - feed.phase_center).norm() < coincidence_tol)
            throw GeometryError("probe coincides with the feed phase center");
        const double k = carrier.wavenumber();
        complex sum{0.0, 0.0};
        for (std::size_t i = 0; i < geom.size(); ++i)
        {
            const Vec3 &p = geom.position(i);
            const double d = checked_distance(feed.phase_center, p, i, "feed");
            const double r = checked_distance(probe, p, i, "probe");
            const double amp = opts.amplitude_taper ? 1.0 / (d * r) : 1.0;
            sum += amp * std::polar(1.0, -k * (d + r)) * w.entries()[Eigen::Index(i)];
        }
        return sum;
    }
} // namespace risbeam
