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


#include <risbeam/risbeam.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>
#include <vector>

using namespace risbeam;

namespace
{
    // 10x16 tiles at 5.8 GHz, stacked along the columns: 160, 320, 640 elements.
    struct FarSetup
    {
        Carrier carrier{5.8e9};
        ArrayGeometry geom;
        std::vector<PlaneWaveSource> sources;
        SteeringVector a;
        IncidenceMatrix B;
        CVector x;
        LinkBudget link;

        explicit FarSetup(std::size_t tiles)
            : geom(build_upa(tiles > 2 ? 20 : 10, tiles > 1 ? 32 : 16, 0.5 * carrier.wavelength())),
              sources{{Direction(0.0, 0.0), {1.0, 0.0}}, {Direction(25.0, 90.0), {0.6, 0.3}}},
              a(steering_vector(geom, Direction(60.0, 0.0), carrier)), B(incidence_matrix(geom, sources, carrier)),
              x(source_amplitudes(sources))
        {
        }
    };

    void BM_BuildQuadraticForm(benchmark::State &state)
    {
        const FarSetup s(std::size_t(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(build_quadratic_form(s.a, s.B, s.x, s.link));
        state.SetLabel("N=" + std::to_string(s.geom.size()));
    }

    void BM_RgdOptimize(benchmark::State &state)
    {
        const FarSetup s(std::size_t(state.range(0)));
        QuadraticForm R = build_quadratic_form(s.a, s.B, s.x, s.link);
        R.matrix /= R.trace();
        const PhaseProfile w0 = PhaseProfile::uniform(s.geom.size());
        for (auto _ : state)
            benchmark::DoNotOptimize(rgd_optimize(R, w0));
        state.SetLabel("N=" + std::to_string(s.geom.size()));
    }

    void BM_PcmProfile(benchmark::State &state)
    {
        const Carrier c(5.8e9);
        const ArrayGeometry g = build_upa(10, 16, 0.5 * c.wavelength());
        const FeedAntenna feed{Vec3(0.0, 0.0, 1.73)};
        for (auto _ : state)
            benchmark::DoNotOptimize(pcm_profile(g, feed, Direction(45.0, 0.0), c));
    }

    void BM_Heatmap(benchmark::State &state)
    {
        const Scenario sc = load_scenario(std::filesystem::path(RISBEAM_SCENARIO_DIR) / "near_pcm_heatmap.json");
        const Report r = run_scenario(sc);
        for (auto _ : state)
            benchmark::DoNotOptimize(coverage_heatmap(sc, r.final_profile, *sc.heatmap));
    }
} // namespace

BENCHMARK(BM_BuildQuadraticForm)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_RgdOptimize)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PcmProfile);
BENCHMARK(BM_Heatmap)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
