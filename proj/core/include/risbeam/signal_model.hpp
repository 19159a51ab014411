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

#ifndef RISBEAM_SIGNAL_MODEL_HPP
#define RISBEAM_SIGNAL_MODEL_HPP

#include "risbeam/geometry.hpp"
#include "risbeam/phase_profile.hpp"

#include <complex>
#include <span>
#include <vector>

namespace risbeam
{
    using complex = std::complex<double>;

    // Far-field incident plane wave. `direction` is the arrival direction as seen
    // from the board, `amplitude` the complex envelope x_m.
    struct PlaneWaveSource
    {
        Direction direction;
        complex amplitude{1.0, 0.0};
    };

    struct LinkBudget
    {
        double attenuation = 1.0; // eta, dimensionless, applied to the field
    };

    // a_i = exp(j 2 pi p_i^T u / lambda)
    struct SteeringVector
    {
        CVector entries;
    };

    // B_im = exp(j 2 pi p_i^T u_m / lambda); N rows (elements), M columns (sources).
    struct IncidenceMatrix
    {
        CMatrix entries;
    };

    // Hermitian rank-one R with |y|^2 = w^H R w.
    struct QuadraticForm
    {
        CMatrix matrix;

        std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }
        double trace() const { return matrix.trace().real(); }
    };

    SteeringVector steering_vector(const ArrayGeometry &geom, const Direction &dir, const Carrier &carrier);

    // Same, for an explicit unit direction vector.
    SteeringVector steering_vector(const ArrayGeometry &geom, const Vec3 &unit_dir, const Carrier &carrier);

    IncidenceMatrix incidence_matrix(const ArrayGeometry &geom, std::span<const PlaneWaveSource> sources,
                                     const Carrier &carrier);

    CVector source_amplitudes(std::span<const PlaneWaveSource> sources);

    // y = eta * a^T diag(w) B x
    complex received_signal(const PhaseProfile &w, const SteeringVector &a, const IncidenceMatrix &B,
                            const CVector &x, const LinkBudget &link);

    // R = eta^2 * (Q .* P^T), with P = B x x^H B^H and Q = conj(a) a^T.
    QuadraticForm build_quadratic_form(const SteeringVector &a, const IncidenceMatrix &B, const CVector &x,
                                       const LinkBudget &link);

    // u with R = u u^H: u = eta * conj(a .* (B x)).
    CVector rank_one_factor(const SteeringVector &a, const IncidenceMatrix &B, const CVector &x,
                            const LinkBudget &link);

    // Re(w^H R w)
    double objective(const PhaseProfile &w, const QuadraticForm &R);
    double objective(const CVector &w, const QuadraticForm &R);

    // Closed-form maximizer of |u^H w|^2 on the manifold: w_i = u_i / |u_i|.
    PhaseProfile aligned_profile(const CVector &u);

    // (sum_i |u_i|)^2
    double aligned_power(const CVector &u);

    // 10 log10(power / reference), clamped below at -300 dB.
    double power_db(double power, double reference = 1.0);
} // namespace risbeam

#endif
