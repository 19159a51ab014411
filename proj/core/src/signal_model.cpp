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

#include "risbeam/signal_model.hpp"

#include "risbeam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace risbeam
{
    SteeringVector steering_vector(const ArrayGeometry &geom, const Vec3 &unit_dir, const Carrier &carrier)
    {
        const double k = carrier.wavenumber();
        CVector a(Eigen::Index(geom.size()));
        for (std::size_t i = 0; i < geom.size(); ++i)
            a[Eigen::Index(i)] = std::polar(1.0, k * geom.position(i).dot(unit_dir));
        return {std::move(a)};
    }

    SteeringVector steering_vector(const ArrayGeometry &geom, const Direction &dir, const Carrier &carrier)
    {
        return steering_vector(geom, direction_vector(dir), carrier);
    }

    IncidenceMatrix incidence_matrix(const ArrayGeometry &geom, std::span<const PlaneWaveSource> sources,
                                     const Carrier &carrier)
    {
        if (sources.empty())
            throw DimensionError("incidence_matrix: at least one source required");
        CMatrix B(Eigen::Index(geom.size()), Eigen::Index(sources.size()));
        for (std::size_t m = 0; m < sources.size(); ++m)
            B.col(Eigen::Index(m)) = steering_vector(geom, sources[m].direction, carrier).entries;
        return {std::move(B)};
    }

    CVector source_amplitudes(std::span<const PlaneWaveSource> sources)
    {
        CVector x(Eigen::Index(sources.size()));
        for (std::size_t m = 0; m < sources.size(); ++m)
            x[Eigen::Index(m)] = sources[m].amplitude;
        return x;
    }

    namespace
    {
        void check_dims(const SteeringVector &a, const IncidenceMatrix &B, const CVector &x, const char *where)
        {
            if (B.entries.rows() != a.entries.size())
                throw DimensionError(std::string(where) + ": incidence matrix has " +
                                     std::to_string(B.entries.rows()) + " rows, steering vector " +
                                     std::to_string(a.entries.size()) + " entries");
            if (B.entries.cols() != x.size())
                throw DimensionError(std::string(where) + ": incidence matrix has " +
                                     std::to_string(B.entries.cols()) + " columns, amplitude vector " +
                                     std::to_string(x.size()) + " entries");
        }
    } // namespace

    complex received_signal(const PhaseProfile &w, const SteeringVector &a, const IncidenceMatrix &B,
                            const CVector &x, const LinkBudget &link)
    {
        check_dims(a, B, x, "received_signal");
        if (Eigen::Index(w.size()) != a.entries.size())
            throw DimensionError("received_signal: profile has " + std::to_string(w.size()) + " entries, array " +
                                 std::to_string(a.entries.size()));
        const CVector incident = B.entries * x;
        // a^T diag(w) (B x); transpose, no conjugation
        return link.attenuation * (a.entries.array() * w.entries().array() * incident.array()).sum();
    }

    QuadraticForm build_quadratic_form(const SteeringVector &a, const IncidenceMatrix &B, const CVector &x,
                                       const LinkBudget &link)
    {
        check_dims(a, B, x, "build_quadratic_form");
        const CVector c = B.entries * x;
        const CMatrix P = c * c.adjoint();
        const CMatrix Q = a.entries.conjugate() * a.entries.transpose();
        const double eta2 = link.attenuation * link.attenuation;
        return {eta2 * Q.cwiseProduct(P.transpose())};
    }

    CVector rank_one_factor(const SteeringVector &a, const IncidenceMatrix &B, const CVector &x,
                            const LinkBudget &link)
    {
        check_dims(a, B, x, "rank_one_factor");
        const CVector c = B.entries * x;
        return link.attenuation * a.entries.cwiseProduct(c).conjugate();
    }

    double objective(const CVector &w, const QuadraticForm &R)
    {
        if (w.size() != R.matrix.rows())
            throw DimensionError("objective: profile size does not match the quadratic form");
        return w.dot(R.matrix * w).real();
    }

    double objective(const PhaseProfile &w, const QuadraticForm &R) { return objective(w.entries(), R); }

    PhaseProfile aligned_profile(const CVector &u) { return PhaseProfile::projected(u); }

    double aligned_power(const CVector &u)
    {
        const double s = u.cwiseAbs().sum();
        return s * s;
    }

    double power_db(double power, double reference)
    {
        if (!(reference > 0.0))
            throw std::invalid_argument("power_db: reference must be positive");
        const double ratio = power / reference;
        if (!(ratio > 0.0))
            return -300.0;
        return std::max(-300.0, 10.0 * std::log10(ratio));
    }
} // namespace risbeam
