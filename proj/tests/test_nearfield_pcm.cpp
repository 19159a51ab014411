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

#include <cmath>
#include <random>

using namespace risbeam;
using namespace testing_support;
using Catch::Approx;

namespace
{
    const Carrier half_metre(speed_of_light / 0.5);

    ArrayGeometry single_at(const Vec3 &p) { return build_upa(1, 1, 0.1).transformed(Mat3::Identity(), p); }

    oracle::P3 to_p3(const Vec3 &v) { return {v.x(), v.y(), v.z()}; }

    Vec3 random_feed(std::mt19937_64 &gen, const ArrayGeometry &g)
    {
        const double r = uniform(gen, 0.3, 3.0) * std::max(g.aperture(), 0.05);
        const Direction d(uniform(gen, 0.0, 70.0), uniform(gen, -180.0, 180.0));
        return g.centroid() + r * direction_vector(d);
    }
} // namespace

TEST_CASE("spatial_delay_phase - examples")
{
    // d = lambda wraps to zero
    const auto one = spatial_delay_phase(single_at(Vec3::Zero()), FeedAntenna{Vec3(0.0, 0.0, 0.5)}, half_metre);
    CHECK(std::abs(one[0]) <= 1e-12);

    // d = lambda / 2 lands on -pi, lower-inclusive
    const auto half = spatial_delay_phase(single_at(Vec3::Zero()), FeedAntenna{Vec3(0.0, 0.0, 0.25)}, half_metre);
    CHECK(half[0] == Approx(-pi).margin(1e-12));
    CHECK(half[0] < pi);

    // feed on the normal through the centroid of a 2x2 board
    const auto sq = build_upa(2, 2, 0.07);
    const auto ph = spatial_delay_phase(sq, FeedAntenna{sq.centroid() + Vec3(0.0, 0.0, 0.83)}, half_metre);
    for (double p : ph)
        CHECK(p == Approx(ph[0]).margin(1e-12));

    CHECK_THROWS_AS(spatial_delay_phase(sq, FeedAntenna{sq.position(3)}, half_metre), GeometryError);
}

TEST_CASE("spatial_delay_phase - matches direct evaluation and is wrapped")
{
    std::mt19937_64 gen(40);
    for (int t = 0; t < 20; ++t)
    {
        const auto g = random_board(gen, 1, 64, 0.5);
        const Vec3 f = random_feed(gen, g);
        const auto ph = spatial_delay_phase(g, FeedAntenna{f}, half_metre);
        const auto pts = to_points(g);
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            CHECK(ph[i] >= -pi);
            CHECK(ph[i] < pi);
            const double ref = 2.0 * pi / 0.5 * oracle::dist(pts[i], to_p3(f));
            CHECK(oracle::wrapped_deg_distance(rad_to_deg(ph[i]), rad_to_deg(ref)) <= 1e-9);
        }
    }
}

TEST_CASE("progressive_phase - examples")
{
    const auto board = build_upa(4, 5, 0.1);
    for (double p : progressive_phase(board, Direction(0.0, 123.0), half_metre))
        CHECK(p == 0.0);

    // x = -lambda/4 and +lambda/4
    const auto pair = progressive_phase(build_upa(1, 2, 0.25), Direction(90.0, 0.0), half_metre);
    CHECK(pair[0] == Approx(pi / 2).margin(1e-12));
    CHECK(pair[1] == Approx(-pi / 2).margin(1e-12));

    // phi = 90 deg: elements in the same row share a phase
    const auto cols = progressive_phase(board, Direction(40.0, 90.0), half_metre);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 1; c < 5; ++c)
            CHECK(cols[r * 5 + c] == Approx(cols[r * 5]).margin(1e-12));
}

TEST_CASE("progressive_phase - closed form on the board plane")
{
    std::mt19937_64 gen(41);
    for (int t = 0; t < 20; ++t)
    {
        const auto g = random_board(gen, 1, 40, 0.5);
        const Direction d = random_direction(gen, 90.0);
        const auto ph = progressive_phase(g, d, half_metre);
        const double th = deg_to_rad(d.theta_deg()), phi = deg_to_rad(d.phi_deg());
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            const Vec3 p = g.position(i);
            const double ref = -4.0 * pi * (p.x() * std::sin(th) * std::cos(phi) + p.y() * std::sin(th) * std::sin(phi));
            CHECK(oracle::wrapped_deg_distance(rad_to_deg(ph[i]), rad_to_deg(ref)) <= 1e-9);
        }
    }
}

TEST_CASE("pcm_profile - co-phasing reaches N")
{
    std::mt19937_64 gen(42);
    for (int t = 0; t < 30; ++t)
    {
        const Carrier c(uniform(gen, 1e9, 30e9));
        auto g = random_board(gen, 1, 160, c.wavelength());
        if (t % 3 == 0)
            g = g.transformed(Pose::rotation_from_ypr(uniform(gen, -40, 40), uniform(gen, -40, 40), 0.0),
                              Vec3(uniform(gen, -1, 1), uniform(gen, -1, 1), 0.0));
        const Vec3 f = random_feed(gen, g);
        const Direction dep = random_direction(gen, 80.0);
        const auto w = pcm_profile(g, FeedAntenna{f}, dep, c);
        const auto s = oracle::nearfield_sum(to_points(g), to_vec(w.entries()), to_p3(f), unit_of(dep), c.wavelength());
        const double n = double(g.size());
        CHECK(std::abs(std::abs(s) - n) <= 1e-9 * n);
        CHECK(std::abs(std::abs(nearfield_array_factor(g, FeedAntenna{f}, w, dep, c)) - n) <= 1e-9 * n);
    }
}

TEST_CASE("pcm_profile - single element")
{
    std::mt19937_64 gen(43);
    const auto g = single_at(Vec3(0.1, -0.2, 0.0));
    const FeedAntenna feed{Vec3(0.3, 0.4, 1.2)};
    const auto w = pcm_profile(g, feed, Direction(20.0, 10.0), half_metre);
    for (int t = 0; t < 20; ++t)
        CHECK(std::abs(nearfield_array_factor(g, feed, w, random_direction(gen, 90.0), half_metre)) ==
              Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pcm_profile - distant feed approaches the progressive phase")
{
    std::mt19937_64 gen(44);
    for (int t = 0; t < 20; ++t)
    {
        const Carrier c(uniform(gen, 2e9, 10e9));
        const auto g = random_board(gen, 4, 160, c.wavelength());
        const double far = 100.0 * std::max(g.aperture(), fraunhofer_distance(g, c));
        const FeedAntenna feed{g.centroid() + Vec3(0.0, 0.0, far)};
        const Direction dep = random_direction(gen, 60.0);
        const auto pcm = pcm_profile(g, feed, dep, c).entries();
        const auto prog = PhaseProfile::from_phases(progressive_phase(g, dep, c)).entries();
        // remove the common offset, then compare per element
        const complex ref = pcm[0] * std::conj(prog[0]);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < pcm.size(); ++i)
            worst = std::max(worst, rad_to_deg(std::abs(std::arg(pcm[i] * std::conj(prog[i]) * std::conj(ref)))));
        CHECK(worst <= 1.0);
    }
}

TEST_CASE("pcm_profile - commanded direction wins on a 1 degree grid")
{
    const auto g = build_upa(4, 4, 0.25);
    const FeedAntenna feed{Vec3(0.2, -0.1, 0.9)};
    for (const Direction dep : {Direction(0.0, 0.0), Direction(30.0, 45.0), Direction(55.0, -120.0)})
    {
        const auto w = pcm_profile(g, feed, dep, half_metre);
        const double target = std::norm(nearfield_array_factor(g, feed, w, dep, half_metre));
        double best = 0.0;
        for (int th = 0; th <= 90; ++th)
            for (int ph = -180; ph < 180; ++ph)
                best = std::max(best, std::norm(nearfield_array_factor(g, feed, w, Direction(th, ph), half_metre)));
        CHECK(target >= best * (1.0 - 1e-12));
        CHECK(target == Approx(256.0).epsilon(1e-9));
    }
}

TEST_CASE("nearfield - global phase invariance")
{
    std::mt19937_64 gen(45);
    for (int t = 0; t < 10; ++t)
    {
        const auto g = random_board(gen, 2, 64, 0.5);
        const FeedAntenna feed{random_feed(gen, g)};
        const auto w = random_profile(gen, g.size());
        const PhaseProfile shifted(std::polar(1.0, uniform(gen, -pi, pi)) * w.entries(), Representation::continuous);
        const Direction d = random_direction(gen, 90.0);
        CHECK(std::norm(nearfield_array_factor(g, feed, shifted, d, half_metre)) ==
              Approx(std::norm(nearfield_array_factor(g, feed, w, d, half_metre))).epsilon(1e-12));
        const Vec3 probe = g.centroid() + Vec3(uniform(gen, -1, 1), uniform(gen, -1, 1), uniform(gen, 0.5, 2));
        CHECK(std::norm(nearfield_probe_field(g, feed, shifted, probe, half_metre)) ==
              Approx(std::norm(nearfield_probe_field(g, feed, w, probe, half_metre))).epsilon(1e-12));
    }
}

TEST_CASE("pcm_focus_profile - focuses on the target point")
{
    std::mt19937_64 gen(46);
    for (int t = 0; t < 10; ++t)
    {
        const auto g = random_board(gen, 4, 100, 0.5);
        const FeedAntenna feed{random_feed(gen, g)};
        const Vec3 target = g.centroid() + Vec3(uniform(gen, -1, 1), uniform(gen, -1, 1), uniform(gen, 0.5, 2));
        const auto w = pcm_focus_profile(g, feed, target, half_metre);
        CHECK(std::abs(nearfield_probe_field(g, feed, w, target, half_metre)) == Approx(double(g.size())).epsilon(1e-9));
    }
}

TEST_CASE("nearfield - amplitude taper and errors")
{
    const auto g = single_at(Vec3::Zero());
    const FeedAntenna feed{Vec3(0.0, 0.0, 2.0)};
    const auto w = PhaseProfile::uniform(1);
    NearFieldOptions taper;
    taper.amplitude_taper = true;
    CHECK(std::abs(nearfield_array_factor(g, feed, w, Direction(0.0, 0.0), half_metre, taper)) == Approx(0.5));
    CHECK(std::abs(nearfield_probe_field(g, feed, w, Vec3(0.0, 0.0, 4.0), half_metre, taper)) == Approx(0.125));

    CHECK_THROWS_AS(nearfield_probe_field(g, feed, w, Vec3::Zero(), half_metre), GeometryError);
    CHECK_THROWS_AS(nearfield_probe_field(g, feed, w, feed.phase_center, half_metre), GeometryError);
    CHECK_THROWS_AS(pcm_profile(g, FeedAntenna{Vec3(0.0, 0.0, 1e-12)}, Direction(0.0, 0.0), half_metre),
                    GeometryError);
    CHECK_THROWS_AS(nearfield_array_factor(g, feed, PhaseProfile::uniform(2), Direction(0.0, 0.0), half_metre),
                    DimensionError);
}
