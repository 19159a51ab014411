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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace risbeam;
using namespace testing_support;
using Catch::Approx;

namespace
{
    // lambda = 0.5 m exactly, so k0 = 4 pi.
    const Carrier half_metre(speed_of_light / 0.5);

    bool close(complex a, complex b, double tol) { return std::abs(a - b) <= tol; }
} // namespace

TEST_CASE("steering_vector - examples")
{
    const Carrier c(5.8e9);
    const auto board = build_upa(10, 16, 0.025);
    const auto a = steering_vector(board, Direction(0.0, 0.0), c);
    for (Eigen::Index i = 0; i < a.entries.size(); ++i)
        CHECK(a.entries[i] == complex(1.0, 0.0));

    const auto one = steering_vector(build_upa(1, 1, 0.025), Direction(33.0, -71.0), c);
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries[0] == complex(1.0, 0.0));

    // 1x2 at lambda/2: x = -lambda/4, +lambda/4; along +x the phase is k x = -pi/2, +pi/2.
    const auto pair = steering_vector(build_upa(1, 2, 0.25), Direction(90.0, 0.0), half_metre);
    CHECK(close(pair.entries[0], std::polar(1.0, -pi / 2), 1e-12));
    CHECK(close(pair.entries[1], std::polar(1.0, pi / 2), 1e-12));
}

TEST_CASE("steering_vector - unit modulus")
{
    std::mt19937_64 gen(10);
    for (int t = 0; t < 20; ++t)
    {
        const auto inst = random_far_instance(gen, 1, 64, 1);
        const auto a = steering_vector(inst.geom, inst.departure, inst.carrier);
        for (Eigen::Index i = 0; i < a.entries.size(); ++i)
            CHECK(std::abs(std::abs(a.entries[i]) - 1.0) <= 1e-12);
    }
}

TEST_CASE("incidence_matrix - examples")
{
    const Carrier c(5.8e9);
    const auto g = build_upa(3, 4, 0.025);
    const PlaneWaveSource broad{Direction(0.0, 0.0), {1.0, 0.0}};
    const auto B1 = incidence_matrix(g, std::span(&broad, 1), c);
    REQUIRE(B1.entries.rows() == 12);
    REQUIRE(B1.entries.cols() == 1);
    CHECK((B1.entries.array() == complex(1.0, 0.0)).all());

    const PlaneWaveSource twin[] = {{Direction(20.0, 40.0), {1.0, 0.0}}, {Direction(20.0, 40.0), {0.0, 2.0}}};
    const auto B2 = incidence_matrix(g, twin, c);
    CHECK(B2.entries.col(0) == B2.entries.col(1));

    const auto sq = build_upa(2, 2, 0.25);
    const PlaneWaveSource tilted{Direction(45.0, 0.0), {1.0, 0.0}};
    const auto B3 = incidence_matrix(sq, std::span(&tilted, 1), half_metre);
    for (std::size_t i = 0; i < 4; ++i)
    {
        const double x = sq.position(i).x();
        CHECK(close(B3.entries(Eigen::Index(i), 0), std::polar(1.0, 2.0 * pi * x * std::sqrt(0.5) / 0.5), 1e-12));
        CHECK(std::abs(std::abs(B3.entries(Eigen::Index(i), 0)) - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(incidence_matrix(g, std::span<const PlaneWaveSource>{}, c), DimensionError);
}

TEST_CASE("received_signal - examples")
{
    SteeringVector a{CVector::Ones(1)};
    IncidenceMatrix B{CMatrix::Ones(1, 1)};
    CHECK(received_signal(PhaseProfile::uniform(1), a, B, CVector::Ones(1), {1.0}) == complex(1.0, 0.0));

    const Carrier c(5.8e9);
    const auto g = build_upa(4, 5, 0.025);
    const PlaneWaveSource broad{Direction(0.0, 0.0), {1.0, 0.0}};
    const auto a2 = steering_vector(g, Direction(0.0, 0.0), c);
    const auto B2 = incidence_matrix(g, std::span(&broad, 1), c);
    CHECK(received_signal(PhaseProfile::uniform(20), a2, B2, CVector::Ones(1), {1.0}) == complex(20.0, 0.0));

    CHECK_THROWS_AS(received_signal(PhaseProfile::uniform(3), a2, B2, CVector::Ones(1), {1.0}), DimensionError);
    CHECK_THROWS_AS(received_signal(PhaseProfile::uniform(20), a2, B2, CVector::Ones(2), {1.0}), DimensionError);
}

TEST_CASE("received_signal - summation oracle")
{
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t)
    {
        const auto inst = random_far_instance(gen, 1, 40, 4);
        const auto f = build(inst);
        const auto w = random_profile(gen, inst.geom.size());
        const complex y = received_signal(w, f.a, f.B, f.x, inst.link);

        std::vector<oracle::P3> arr;
        std::vector<oracle::cplx> x;
        for (const auto &s : inst.sources)
        {
            arr.push_back(unit_of(s.direction));
            x.push_back(s.amplitude);
        }
        const complex ref = oracle::received_sum(to_points(inst.geom), to_vec(w.entries()), unit_of(inst.departure),
                                                 arr, x, inst.carrier.wavelength(), inst.link.attenuation);
        CHECK(std::abs(y - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("build_quadratic_form - examples")
{
    // N = 1: R = eta^2 |B x|^2, independent of w
    SteeringVector a{CVector::Constant(1, std::polar(1.0, 0.3))};
    IncidenceMatrix B{CMatrix::Constant(1, 2, std::polar(1.0, -1.1))};
    CVector x(2);
    x << complex(1.0, 0.5), complex(-0.25, 2.0);
    const LinkBudget link{0.7};
    const auto R1 = build_quadratic_form(a, B, x, link);
    REQUIRE(R1.matrix.rows() == 1);
    const double expect = 0.49 * std::norm((B.entries * x)(0));
    CHECK(R1.matrix(0, 0).real() == Approx(expect).epsilon(1e-14));
    CHECK(R1.matrix(0, 0).imag() == Approx(0.0).margin(1e-15));
    CHECK(objective(PhaseProfile::from_phases(std::vector<double>{2.0}), R1) == Approx(expect).epsilon(1e-13));

    // N = 2, everything broadside: ones(2x2), best value 4
    SteeringVector a2{CVector::Ones(2)};
    IncidenceMatrix B2{CMatrix::Ones(2, 1)};
    const auto R2 = build_quadratic_form(a2, B2, CVector::Ones(1), {1.0});
    CHECK((R2.matrix.array() == complex(1.0, 0.0)).all());
    CHECK(objective(PhaseProfile::uniform(2), R2) == 4.0);
    CHECK(aligned_power(rank_one_factor(a2, B2, CVector::Ones(1), {1.0})) == 4.0);

    CHECK_THROWS_AS(build_quadratic_form(a2, B2, CVector::Ones(3), {1.0}), DimensionError);
}

TEST_CASE("build_quadratic_form - trace identity against |y|^2")
{
    std::mt19937_64 gen(12);
    FarInstance inst;
    inst.carrier = Carrier(5.8e9);
    inst.geom = build_upa(2, 4, 0.025);
    for (int m = 0; m < 3; ++m)
        inst.sources.push_back({random_direction(gen), std::polar(uniform(gen, 0.5, 1.5), uniform(gen, -pi, pi))});
    inst.departure = random_direction(gen);
    inst.link.attenuation = 0.8;
    const auto f = build(inst);
    for (int t = 0; t < 100; ++t)
    {
        const auto w = random_profile(gen, 8);
        const double lhs = objective(w, f.R);
        const double rhs = oracle_power(inst, w.entries());
        CHECK(oracle::rel_err(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("QuadraticForm - Hermitian, PSD, rank one")
{
    std::mt19937_64 gen(13);
    for (int t = 0; t < 20; ++t)
    {
        const auto inst = random_far_instance(gen, 2, 32, 4);
        const auto f = build(inst);
        const CMatrix &R = f.R.matrix;
        CHECK((R - R.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);

        Eigen::SelfAdjointEigenSolver<CMatrix> es(R);
        const auto &ev = es.eigenvalues(); // ascending
        const double tr = f.R.trace();
        CHECK(std::abs(ev[ev.size() - 1] - tr) <= 1e-9 * tr);
        for (Eigen::Index i = 0; i + 1 < ev.size(); ++i)
            CHECK(std::abs(ev[i]) <= 1e-9 * tr);

        // R equals the outer product of its rank-one factor
        CHECK((R - f.u * f.u.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * tr);
    }
}

TEST_CASE("objective - examples")
{
    const QuadraticForm ones{CMatrix::Ones(5, 5)};
    CHECK(objective(PhaseProfile::uniform(5), ones) == Approx(25.0).epsilon(1e-15));

    std::mt19937_64 gen(14);
    const QuadraticForm scaled{3.5 * CMatrix::Identity(7, 7)};
    for (int t = 0; t < 10; ++t)
        CHECK(objective(random_profile(gen, 7), scaled) == Approx(7 * 3.5).epsilon(1e-14));

    for (int t = 0; t < 20; ++t)
    {
        const auto inst = random_far_instance(gen, 1, 32, 3);
        const auto f = build(inst);
        const auto w = random_profile(gen, inst.geom.size());
        const double value = objective(w, f.R);
        CHECK(oracle::rel_err(value, oracle_power(inst, w.entries())) <= 1e-9);
        const complex full = w.entries().dot(f.R.matrix * w.entries());
        CHECK(std::abs(full.imag()) <= 1e-10 * f.R.trace());
    }
}

TEST_CASE("aligned profile attains (sum |u_i|)^2 and dominates random profiles")
{
    std::mt19937_64 gen(15);
    for (int t = 0; t < 20; ++t)
    {
        const auto inst = random_far_instance(gen, 1, 48, 3);
        const auto f = build(inst);
        const auto best = aligned_profile(f.u);
        const double peak = aligned_power(f.u);
        CHECK(oracle::rel_err(objective(best, f.R), peak) <= 1e-12);
        CHECK(oracle::rel_err(oracle_power(inst, best.entries()), peak) <= 1e-9);
        for (int s = 0; s < 50; ++s)
            CHECK(objective(random_profile(gen, inst.geom.size()), f.R) <= peak * (1.0 + 1e-12));
    }
}

TEST_CASE("attenuation scaling")
{
    std::mt19937_64 gen(16);
    for (int t = 0; t < 20; ++t)
    {
        auto inst = random_far_instance(gen, 1, 32, 3);
        const auto f = build(inst);
        const auto w = random_profile(gen, inst.geom.size());

        // c = 2 scales by exactly 4 in floating point
        LinkBudget doubled{2.0 * inst.link.attenuation};
        const auto R2 = build_quadratic_form(f.a, f.B, f.x, doubled);
        CHECK(objective(w, R2) == 4.0 * objective(w, f.R));

        const double c = uniform(gen, 0.1, 5.0);
        LinkBudget scaled{c * inst.link.attenuation};
        const auto Rc = build_quadratic_form(f.a, f.B, f.x, scaled);
        CHECK(oracle::rel_err(objective(w, Rc), c * c * objective(w, f.R)) <= 1e-12);

        const auto best = aligned_profile(f.u);
        const auto best_c = aligned_profile(rank_one_factor(f.a, f.B, f.x, scaled));
        CHECK((best.entries() - best_c.entries()).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("power_db clamps")
{
    CHECK(power_db(100.0) == Approx(20.0));
    CHECK(power_db(100.0, 10.0) == Approx(10.0));
    CHECK(power_db(0.0) == -300.0);
    CHECK(power_db(1e-40) == -300.0);
    CHECK_THROWS_AS(power_db(1.0, 0.0), std::invalid_argument);
}
