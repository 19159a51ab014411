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

#ifndef RISBEAM_TESTS_SUPPORT_HPP
#define RISBEAM_TESTS_SUPPORT_HPP

#include "oracles.hpp"

#include <risbeam/risbeam.hpp>

#include <random>
#include <vector>

namespace testing_support
{
    using namespace risbeam;

    struct FarInstance
    {
        ArrayGeometry geom;
        Carrier carrier{5.8e9};
        std::vector<PlaneWaveSource> sources;
        Direction departure;
        LinkBudget link;
    };

    inline double uniform(std::mt19937_64 &gen, double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    inline std::size_t uniform_int(std::mt19937_64 &gen, std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
    }

    inline Direction random_direction(std::mt19937_64 &gen, double max_theta = 85.0)
    {
        return Direction(uniform(gen, 0.0, max_theta), uniform(gen, -180.0, 180.0));
    }

    // rows * cols <= max_n, at least min_n elements.
    inline ArrayGeometry random_board(std::mt19937_64 &gen, std::size_t min_n, std::size_t max_n, double lambda)
    {
        for (;;)
        {
            const std::size_t rows = uniform_int(gen, 1, std::max<std::size_t>(1, max_n / 2));
            const std::size_t cols = uniform_int(gen, 1, std::max<std::size_t>(1, max_n / rows));
            if (rows * cols < min_n || rows * cols > max_n)
                continue;
            return build_upa(rows, cols, uniform(gen, 0.2, 0.7) * lambda);
        }
    }

    inline FarInstance random_far_instance(std::mt19937_64 &gen, std::size_t min_n, std::size_t max_n,
                                           std::size_t max_m)
    {
        FarInstance inst;
        inst.carrier = Carrier(uniform(gen, 1e9, 30e9));
        inst.geom = random_board(gen, min_n, max_n, inst.carrier.wavelength());
        const std::size_t m = uniform_int(gen, 1, max_m);
        for (std::size_t i = 0; i < m; ++i)
            inst.sources.push_back({random_direction(gen), std::polar(uniform(gen, 0.5, 1.5), uniform(gen, -pi, pi))});
        inst.departure = random_direction(gen);
        inst.link.attenuation = uniform(gen, 0.1, 2.0);
        return inst;
    }

    inline PhaseProfile random_profile(std::mt19937_64 &gen, std::size_t n)
    {
        std::vector<double> ph(n);
        for (auto &p : ph)
            p = uniform(gen, -pi, pi);
        return PhaseProfile::from_phases(ph);
    }

    inline std::vector<oracle::P3> to_points(const ArrayGeometry &g)
    {
        std::vector<oracle::P3> out;
        for (const auto &p : g.positions())
            out.push_back({p.x(), p.y(), p.z()});
        return out;
    }

    inline std::vector<oracle::cplx> to_vec(const CVector &v)
    {
        return std::vector<oracle::cplx>(v.data(), v.data() + v.size());
    }

    inline CVector to_cvector(const std::vector<oracle::cplx> &v)
    {
        CVector out(static_cast<Eigen::Index>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            out[static_cast<Eigen::Index>(i)] = v[i];
        return out;
    }

    inline oracle::P3 unit_of(const Direction &d) { return oracle::unit(d.theta_deg(), d.phi_deg()); }

    // |y|^2 for an instance evaluated by the summation oracle.
    inline double oracle_power(const FarInstance &inst, const CVector &w)
    {
        std::vector<oracle::P3> arr;
        std::vector<oracle::cplx> x;
        for (const auto &s : inst.sources)
        {
            arr.push_back(unit_of(s.direction));
            x.push_back(s.amplitude);
        }
        return std::norm(oracle::received_sum(to_points(inst.geom), to_vec(w), unit_of(inst.departure), arr, x,
                                              inst.carrier.wavelength(), inst.link.attenuation));
    }

    inline std::vector<oracle::cplx> oracle_coefficients(const FarInstance &inst)
    {
        std::vector<oracle::P3> arr;
        std::vector<oracle::cplx> x;
        for (const auto &s : inst.sources)
        {
            arr.push_back(unit_of(s.direction));
            x.push_back(s.amplitude);
        }
        return oracle::element_coefficients(to_points(inst.geom), unit_of(inst.departure), arr, x,
                                            inst.carrier.wavelength(), inst.link.attenuation);
    }

    struct BuiltForm
    {
        SteeringVector a;
        IncidenceMatrix B;
        CVector x;
        QuadraticForm R;
        CVector u;
    };

    inline BuiltForm build(const FarInstance &inst)
    {
        BuiltForm f{steering_vector(inst.geom, inst.departure, inst.carrier),
                    incidence_matrix(inst.geom, inst.sources, inst.carrier), source_amplitudes(inst.sources), {}, {}};
        f.R = build_quadratic_form(f.a, f.B, f.x, inst.link);
        f.u = rank_one_factor(f.a, f.B, f.x, inst.link);
        return f;
    }
} // namespace testing_support

#endif
