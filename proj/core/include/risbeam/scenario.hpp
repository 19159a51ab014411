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

#ifndef RISBEAM_SCENARIO_HPP
#define RISBEAM_SCENARIO_HPP

#include "risbeam/geometry.hpp"
#include "risbeam/manifold_opt.hpp"
#include "risbeam/nearfield_pcm.hpp"
#include "risbeam/quantizer.hpp"
#include "risbeam/signal_model.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace risbeam
{
    inline constexpr int scenario_schema_version = 1;

    enum class Mode
    {
        far_rgd,
        near_pcm,
        multihop
    };

    std::string_view to_string(Mode mode);

    enum class InitKind
    {
        ones,
        random
    };

    // One physical board (possibly tiled from identical copies) placed in the world.
    struct BoardSpec
    {
        std::string id;
        std::size_t rows = 10;
        std::size_t cols = 16;
        double spacing = 0.025;   // m
        std::vector<Vec3> tiles;  // board-frame offsets of each copy; empty means one copy at the origin
        Pose pose;
        double attenuation = 1.0; // per-hop field attenuation in multihop mode
        bool optimize = true;     // multihop: false leaves the node at the uniform profile

        // Local (tiled) geometry in the board frame.
        ArrayGeometry local_geometry() const;
        ArrayGeometry world_geometry() const;

        // One id per tiled copy: "<id>" for untiled boards, "<id>.<k>" otherwise.
        std::vector<std::string> tile_ids() const;
    };

    using Source = std::variant<PlaneWaveSource, FeedAntenna>;
    using Receiver = std::variant<Direction, Vec3>; // far-field direction or 3-D point

    struct SweepSpec
    {
        double theta_start_deg = -90.0;
        double theta_stop_deg = 90.0;
        double step_deg = 1.0;
        double phi_deg = 0.0;
    };

    enum class GridPlane
    {
        xy,
        xz,
        yz
    };

    // Rectangular probe grid in an axis-aligned plane. u and v are the two in-plane
    // coordinates in (x, y, z) order; `offset` is the remaining coordinate.
    struct HeatmapSpec
    {
        GridPlane plane = GridPlane::xz;
        double offset = 0.0;
        double u_min = 0.0, u_max = 0.0;
        double v_min = 0.0, v_max = 0.0;
        double resolution = 0.1;

        std::vector<Vec3> probes() const;
        std::size_t u_count() const;
        std::size_t v_count() const;
    };

    // Settings shared by every optimization run of a scenario.
    struct RunSettings
    {
        Carrier carrier{5.8e9};
        OptimizerConfig optimizer;
        // Optimize R / trace(R) instead of R. The maximizer is the same, but the fixed Armijo
        // step alpha_bar = 1 then means the same thing for every link budget. Trace costs and
        // gradient norms are reported in physical units either way.
        bool normalize_objective = true;
        bool quantize = false;
        HardwareStates states;
        InitKind init = InitKind::ones;
        std::uint64_t seed = 0;
        double power_reference = 1.0;
        NearFieldOptions nearfield;
    };

    struct Scenario
    {
        int schema_version = scenario_schema_version;
        std::string name;
        Mode mode = Mode::far_rgd;
        std::vector<BoardSpec> boards;
        std::vector<Source> sources;
        Receiver receiver = Direction{};
        LinkBudget link;
        RunSettings settings;
        std::optional<SweepSpec> sweep;
        std::optional<HeatmapSpec> heatmap;

        // Throws ConfigError / GeometryError describing the first problem found.
        void validate() const;

        // All boards of the scenario in world coordinates, concatenated in order.
        ArrayGeometry world_geometry() const;
        std::vector<std::string> board_ids() const;
        std::vector<PlaneWaveSource> plane_wave_sources() const;
    };

    Scenario parse_scenario(const nlohmann::json &j);
    Scenario parse_scenario_text(std::string_view text);
    Scenario load_scenario(const std::filesystem::path &path);

    // Hop k reflects the wave arriving from `incident` towards `departure`; the field
    // leaving hop k becomes the single source amplitude of hop k+1.
    struct HopNode
    {
        std::string id;
        ArrayGeometry geometry; // world frame
        std::vector<std::string> board_ids;
        Vec3 position = Vec3::Zero();
        std::vector<PlaneWaveSource> incident; // amplitudes only meaningful for the first hop
        Direction departure;
        LinkBudget link;
        bool optimize = true;
    };

    struct HopChain
    {
        std::vector<HopNode> nodes;

        // Non-empty, and for every k: departure of node k points at node k+1 and the
        // single incident direction of node k+1 points back at node k (tol 1e-9 rad).
        void validate() const;
    };

    HopChain make_hop_chain(const Scenario &scenario);

    struct HopReport
    {
        std::string id;
        std::size_t num_elements = 0;
        double power_before = 0.0;  // this node uniform, upstream as configured
        double power_after = 0.0;   // this node's final profile
        double power_ideal = 0.0;   // closed-form optimum for this hop's incident field
        complex field_out{0.0, 0.0};
        PhaseProfile continuous_profile;
        PhaseProfile final_profile;
        std::optional<OptimizerTrace> trace;
    };

    struct Report
    {
        std::string scenario_name;
        Mode mode = Mode::far_rgd;
        std::size_t num_elements = 0;
        double frequency_hz = 0.0;
        double power_reference = 1.0;

        double power_before = 0.0;     // uniform all-ones profile
        double power_continuous = 0.0; // continuous optimized profile
        std::optional<double> power_quantized;
        double power_after = 0.0;      // final profile (quantized when requested)
        double power_ideal = 0.0;      // closed-form optimum of the continuous problem
        std::optional<double> fraunhofer_distance;

        PhaseProfile continuous_profile;
        PhaseProfile final_profile;
        std::optional<OptimizerTrace> trace;
        std::optional<Codebook> codebook;
        std::vector<HopReport> hops;

        double gain_db() const;
    };

    Report run_scenario(const Scenario &scenario);
    Report run_multihop(const HopChain &chain, const RunSettings &settings);

    struct SweepRow
    {
        double theta_deg;
        double phi_deg;
        double power;
        double power_db;
    };

    struct SweepResult
    {
        std::vector<SweepRow> rows;
        std::size_t peak = 0;
    };

    // Departure-angle pattern of a fixed profile for far_rgd and near_pcm scenarios.
    SweepResult sweep_pattern(const Scenario &scenario, const PhaseProfile &profile, const SweepSpec &spec);

    struct CoverageGrid
    {
        std::vector<Vec3> probes;
        std::vector<double> power;
        std::vector<double> power_db;
        double resolution = 0.0;
        std::size_t peak = 0;
    };

    // Near-field power at each probe for a near_pcm scenario with the given profile.
    CoverageGrid coverage_heatmap(const Scenario &scenario, const PhaseProfile &profile, const HeatmapSpec &spec);

    nlohmann::json report_to_json(const Report &report);
    std::string format_report(const Report &report);
    std::string format_sweep_csv(const SweepResult &sweep);
    std::string format_heatmap_csv(const CoverageGrid &grid);
    nlohmann::json sweep_summary_json(const SweepResult &sweep);
    nlohmann::json heatmap_summary_json(const CoverageGrid &grid);
} // namespace risbeam

#endif
