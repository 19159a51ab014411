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

#ifndef RISBEAM_PHASE_PROFILE_HPP
#define RISBEAM_PHASE_PROFILE_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace risbeam
{
    using CVector = Eigen::VectorXcd;
    using CMatrix = Eigen::MatrixXcd;

    enum class Representation
    {
        continuous,
        quantized
    };

    // Per-element reflection coefficients w_i. Continuous profiles live on the
    // product-of-circles manifold (|w_i| = 1). Quantized profiles hold hardware state
    // values, whose modulus equals the configured state amplitude.
    class PhaseProfile
    {
    public:
        PhaseProfile() = default;

        // Takes ownership of the coefficients. Continuous entries must have unit
        // modulus to 1e-12, otherwise std::invalid_argument is thrown.
        PhaseProfile(CVector entries, Representation rep);

        static PhaseProfile uniform(std::size_t n);
        static PhaseProfile from_phases(std::span<const double> phases_rad);

        // Normalizes each entry to unit modulus; zero entries map to 1.
        static PhaseProfile projected(const CVector &v);

        std::size_t size() const { return static_cast<std::size_t>(entries_.size()); }
        const CVector &entries() const { return entries_; }
        Representation representation() const { return rep_; }
        bool is_quantized() const { return rep_ == Representation::quantized; }

        // arg(w_i) in degrees, wrapped to [-180, 180).
        std::vector<double> phases_deg() const;

        // max_i | 1 - |w_i| |
        double manifold_residual() const;

    private:
        CVector entries_;
        Representation rep_ = Representation::continuous;
    };

    // Re(sum_i conj(a_i) b_i): the real inner product used on the manifold.
    double real_inner(const CVector &a, const CVector &b);
} // namespace risbeam

#endif
