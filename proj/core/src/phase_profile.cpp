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

#include "risbeam/phase_profile.hpp"

#include "risbeam/angles.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace risbeam
{
    PhaseProfile::PhaseProfile(CVector entries, Representation rep) : entries_(std::move(entries)), rep_(rep)
    {
        if (!entries_.allFinite())
            throw std::invalid_argument("PhaseProfile: non-finite coefficient");
        if (rep_ == Representation::continuous && manifold_residual() > 1e-12)
            throw std::invalid_argument("PhaseProfile: continuous entries must have unit modulus");
    }

    PhaseProfile PhaseProfile::uniform(std::size_t n)
    {
        return PhaseProfile(CVector::Ones(Eigen::Index(n)), Representation::continuous);
    }

    PhaseProfile PhaseProfile::from_phases(std::span<const double> phases_rad)
    {
        CVector v(Eigen::Index(phases_rad.size()));
        for (std::size_t i = 0; i < phases_rad.size(); ++i)
            v[Eigen::Index(i)] = std::polar(1.0, phases_rad[i]);
        return PhaseProfile(std::move(v), Representation::continuous);
    }

    PhaseProfile PhaseProfile::projected(const CVector &v)
    {
        CVector out(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i)
        {
            const double m = std::abs(v[i]);
            out[i] = m > 0.0 ? v[i] / m : std::complex<double>(1.0, 0.0);
        }
        return PhaseProfile(std::move(out), Representation::continuous);
    }

    std::vector<double> PhaseProfile::phases_deg() const
    {
        std::vector<double> out(size());
        for (std::size_t i = 0; i < size(); ++i)
            out[i] = wrap_degrees(rad_to_deg(std::arg(entries_[Eigen::Index(i)])));
        return out;
    }

    double PhaseProfile::manifold_residual() const
    {
        double r = 0.0;
        for (Eigen::Index i = 0; i < entries_.size(); ++i)
            r = std::max(r, std::abs(1.0 - std::abs(entries_[i])));
        return r;
    }

    double real_inner(const CVector &a, const CVector &b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("real_inner: size mismatch");
        return a.dot(b).real(); // Eigen's dot conjugates the first argument
    }
} // namespace risbeam
