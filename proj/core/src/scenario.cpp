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

#include "risbeam/scenario.hpp"

#include "risbeam/errors.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace risbeam
{
    using nlohmann::json;

    std::string_view to_string(Mode mode)
    {
        switch (mode)
        {
        case Mode::far_rgd:
            return "far_rgd";
        case Mode::near_pcm:
            return "near_pcm";
        case Mode::multihop:
            return "multihop";
        }
        return "unknown";
    }

    ArrayGeometry BoardSpec::local_geometry() const
    {
        const ArrayGeometry board = build_upa(rows, cols, spacing);
        if (tiles.empty())
            return board;
        return tile_boards(board, tiles);
    }

    ArrayGeometry BoardSpec::world_geometry() const
    {
        return local_geometry().transformed(pose.rotation, pose.position);
    }

    std::vector<std::string> BoardSpec::tile_ids() const
    {
        if (tiles.size() <= 1)
            return {id};
        std::vector<std::string> out;
        for (std::size_t k = 0; k < tiles.size(); ++k)
            out.push_back(id + "." + std::to_string(k));
        return out;
    }

    std::size_t HeatmapSpec::u_count() const
    {
        return std::size_t(std::floor((u_max - u_min) / resolution + 1e-9)) + 1;
    }

    std::size_t HeatmapSpec::v_count() const
    {
        return std::size_t(std::floor((v_max - v_min) / resolution + 1e-9)) + 1;
    }

    std::vector<Vec3> HeatmapSpec::probes() const
    {
        if (!(resolution > 0.0))
            throw ConfigError("heatmap.resolution_m must be > 0");
        if (u_max < u_min || v_max < v_min)
            throw ConfigError("heatmap ranges must satisfy min <= max");
        std::vector<Vec3> out;
        const std::size_t nu = u_count(), nv = v_count();
        out.reserve(nu * nv);
        for (std::size_t iv = 0; iv < nv; ++iv)
            for (std::size_t iu = 0; iu < nu; ++iu)
            {
                const double u = u_min + double(iu) * resolution;
                const double v = v_min + double(iv) * resolution;
                switch (plane)
                {
                case GridPlane::xy:
                    out.emplace_back(u, v, offset);
                    break;
                case GridPlane::xz:
                    out.emplace_back(u, offset, v);
                    break;
                case GridPlane::yz:
                    out.emplace_back(offset, u, v);
                    break;
                }
            }
        return out;
    }

    ArrayGeometry Scenario::world_geometry() const
    {
        std::vector<ArrayGeometry> parts;
        for (const auto &b : boards)
            parts.push_back(b.world_geometry());
        return concatenate(parts);
    }

    std::vector<std::string> Scenario::board_ids() const
    {
        std::vector<std::string> out;
        for (const auto &b : boards)
            for (auto &id : b.tile_ids())
                out.push_back(std::move(id));
        return out;
    }

    std::vector<PlaneWaveSource> Scenario::plane_wave_sources() const
    {
        std::vector<PlaneWaveSource> out;
        for (const auto &s : sources)
            if (const auto *p = std::get_if<PlaneWaveSource>(&s))
                out.push_back(*p);
        return out;
    }

    void Scenario::validate() const
    {
        if (schema_version != scenario_schema_version)
            throw ConfigError("unsupported schema_version " + std::to_string(schema_version));
        if (boards.empty())
            throw ConfigError("scenario needs at least one board");
        if (sources.empty())
            throw ConfigError("scenario needs at least one source");
        settings.optimizer.validate();
        settings.states.validate();
        if (!(settings.power_reference > 0.0))
            throw ConfigError("power_reference must be > 0");
        if (!(link.attenuation >= 0.0))
            throw ConfigError("link.attenuation must be >= 0");

        std::set<std::string> ids;
        for (const auto &b : boards)
        {
            if (b.id.empty() || b.id.find_first_of(" \t\r\n") != std::string::npos)
                throw ConfigError("board ids must be non-empty and contain no whitespace");
            if (!ids.insert(b.id).second)
                throw ConfigError("duplicate board id '" + b.id + "'");
            if (b.rows == 0 || b.cols == 0 || !(b.spacing > 0.0))
                throw ConfigError("board '" + b.id + "': rows, cols and spacing_m must be positive");
            if (!(b.attenuation >= 0.0))
                throw ConfigError("board '" + b.id + "': attenuation must be >= 0");
            b.pose.validate();
        }

        std::size_t n_plane = 0, n_feed = 0;
        for (const auto &s : sources)
        {
            if (const auto *p = std::get_if<PlaneWaveSource>(&s))
            {
                ++n_plane;
                if (!(std::abs(p->amplitude) > 0.0))
                    throw ConfigError("plane-wave source amplitude must be non-zero");
            }
            else
                ++n_feed;
        }

        switch (mode)
        {
        case Mode::far_rgd:
        case Mode::multihop:
            if (n_feed > 0)
                throw ConfigError(std::string(to_string(mode)) + " mode takes plane_wave sources only");
            if (!std::holds_alternative<Direction>(receiver))
                throw ConfigError(std::string(to_string(mode)) + " mode needs a direction receiver");
            break;
        case Mode::near_pcm:
            if (n_plane > 0 || n_feed != 1)
                throw ConfigError("near_pcm mode takes exactly one feed source");
            break;
        }
        if (heatmap && mode != Mode::near_pcm)
            throw ConfigError("heatmap requires near_pcm mode (a feed source)");
        if (sweep && !(sweep->step_deg > 0.0))
            throw ConfigError("sweep.step_deg must be > 0");
        if (sweep && sweep->theta_stop_deg < sweep->theta_start_deg)
            throw ConfigError("sweep.theta_stop_deg must be >= theta_start_deg");
        if (heatmap && !(heatmap->resolution > 0.0))
            throw ConfigError("heatmap.resolution_m must be > 0");

        // Geometry sanity: each board builds, and boards of one array do not overlap.
        if (mode == Mode::multihop)
        {
            for (const auto &b : boards)
                (void)b.local_geometry();
        }
        else
        {
            const ArrayGeometry g = world_geometry();
            double min_spacing = boards.front().spacing;
            for (const auto &b : boards)
                min_spacing = std::min(min_spacing, b.spacing);
            check_separation(g, 0.5 * min_spacing);
        }
    }

    namespace
    {
        // Rejects keys outside `allowed` so typos surface instead of silently using defaults.
        void check_keys(const json &obj, const char *where, std::initializer_list<const char *> allowed)
        {
            if (!obj.is_object())
                throw ConfigError(std::string(where) + " must be an object");
            for (const auto &[key, _] : obj.items())
            {
                bool ok = false;
                for (const char *a : allowed)
                    ok = ok || key == a;
                if (!ok)
                    throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
            }
        }

        template <typename T>
        T get_or(const json &obj, const char *key, T fallback)
        {
            auto it = obj.find(key);
            return it == obj.end() ? fallback : it->get<T>();
        }

        Vec3 parse_vec3(const json &j, const char *where)
        {
            if (!j.is_array() || j.size() != 3)
                throw ConfigError(std::string(where) + " must be a 3-element array");
            return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
        }

        Direction parse_direction(const json &j) { return Direction(j.at("theta_deg").get<double>(), j.at("phi_deg").get<double>()); }

        Pose parse_pose(const json &j)
        {
            check_keys(j, "pose", {"position_m", "yaw_pitch_roll_deg", "rotation"});
            Pose pose;
            if (j.contains("position_m"))
                pose.position = parse_vec3(j["position_m"], "pose.position_m");
            if (j.contains("yaw_pitch_roll_deg") && j.contains("rotation"))
                throw ConfigError("pose: give either yaw_pitch_roll_deg or rotation, not both");
            if (j.contains("yaw_pitch_roll_deg"))
            {
                const Vec3 ypr = parse_vec3(j["yaw_pitch_roll_deg"], "pose.yaw_pitch_roll_deg");
                pose.rotation = Pose::rotation_from_ypr(ypr[0], ypr[1], ypr[2]);
            }
            if (j.contains("rotation"))
            {
                const auto &r = j["rotation"];
                if (!r.is_array() || r.size() != 3)
                    throw ConfigError("pose.rotation must be a 3x3 array of rows");
                for (int i = 0; i < 3; ++i)
                    pose.rotation.row(i) = parse_vec3(r[i], "pose.rotation row").transpose();
            }
            return pose;
        }

        BoardSpec parse_board(const json &j, std::size_t index)
        {
            check_keys(j, "board", {"id", "rows", "cols", "spacing_m", "tiling", "tiles_m", "pose", "attenuation", "optimize"});
            BoardSpec b;
            b.id = get_or<std::string>(j, "id", "board" + std::to_string(index));
            b.rows = get_or<std::size_t>(j, "rows", b.rows);
            b.cols = get_or<std::size_t>(j, "cols", b.cols);
            b.spacing = get_or<double>(j, "spacing_m", b.spacing);
            if (j.contains("tiling") && j.contains("tiles_m"))
                throw ConfigError("board: give either tiling or tiles_m, not both");
            if (j.contains("tiling"))
            {
                const auto &t = j["tiling"];
                check_keys(t, "board.tiling", {"rows", "cols"});
                const auto tr = t.at("rows").get<std::size_t>();
                const auto tc = t.at("cols").get<std::size_t>();
                if (b.rows == 0 || b.cols == 0 || !(b.spacing > 0.0))
                    throw ConfigError("board '" + b.id + "': rows, cols and spacing_m must be positive");
                b.tiles = tiling_offsets(build_upa(b.rows, b.cols, b.spacing), tr, tc);
            }
            if (j.contains("tiles_m"))
                for (const auto &t : j["tiles_m"])
                    b.tiles.push_back(parse_vec3(t, "board.tiles_m entry"));
            if (j.contains("pose"))
                b.pose = parse_pose(j["pose"]);
            b.attenuation = get_or<double>(j, "attenuation", -1.0); // resolved against link later
            b.optimize = get_or<bool>(j, "optimize", true);
            return b;
        }

        Source parse_source(const json &j)
        {
            const auto type = j.at("type").get<std::string>();
            if (type == "plane_wave")
            {
                check_keys(j, "plane_wave source", {"type", "theta_deg", "phi_deg", "amplitude"});
                PlaneWaveSource s;
                s.direction = parse_direction(j);
                if (j.contains("amplitude"))
                {
                    const auto &a = j["amplitude"];
                    if (a.is_number())
                        s.amplitude = {a.get<double>(), 0.0};
                    else if (a.is_array() && a.size() == 2)
                        s.amplitude = {a[0].get<double>(), a[1].get<double>()};
                    else
                        throw ConfigError("source amplitude must be a number or [re, im]");
                }
                return s;
            }
            if (type == "feed")
            {
                check_keys(j, "feed source", {"type", "position_m"});
                return FeedAntenna{parse_vec3(j.at("position_m"), "feed.position_m")};
            }
            throw ConfigError("unknown source type '" + type + "'");
        }

        Receiver parse_receiver(const json &j)
        {
            const auto type = j.at("type").get<std::string>();
            if (type == "direction")
            {
                check_keys(j, "receiver", {"type", "theta_deg", "phi_deg"});
                return parse_direction(j);
            }
            if (type == "point")
            {
                check_keys(j, "receiver", {"type", "position_m"});
                return parse_vec3(j.at("position_m"), "receiver.position_m");
            }
            throw ConfigError("unknown receiver type '" + type + "'");
        }

        Mode parse_mode(const std::string &s)
        {
            if (s == "far_rgd")
                return Mode::far_rgd;
            if (s == "near_pcm")
                return Mode::near_pcm;
            if (s == "multihop")
                return Mode::multihop;
            throw ConfigError("unknown mode '" + s + "' (expected far_rgd, near_pcm or multihop)");
        }

        OptimizerConfig parse_optimizer(const json &j)
        {
            check_keys(j, "optimizer", {"epsilon", "alpha_bar", "sigma", "beta", "max_iters", "max_backtracks",
                                        "max_retraction_halvings", "escape_saddles", "normalize"});
            OptimizerConfig c;
            c.epsilon = get_or(j, "epsilon", c.epsilon);
            c.alpha_bar = get_or(j, "alpha_bar", c.alpha_bar);
            c.sigma = get_or(j, "sigma", c.sigma);
            c.beta = get_or(j, "beta", c.beta);
            c.max_iters = get_or(j, "max_iters", c.max_iters);
            c.max_backtracks = get_or(j, "max_backtracks", c.max_backtracks);
            c.max_retraction_halvings = get_or(j, "max_retraction_halvings", c.max_retraction_halvings);
            c.escape_saddles = get_or(j, "escape_saddles", c.escape_saddles);
            return c;
        }

        HardwareStates parse_states(const json &j)
        {
            check_keys(j, "hardware_states", {"state0_phase_deg", "state1_phase_deg", "state0_amplitude", "state1_amplitude"});
            HardwareStates s;
            s.state0_phase_deg = get_or(j, "state0_phase_deg", s.state0_phase_deg);
            s.state1_phase_deg = get_or(j, "state1_phase_deg", s.state1_phase_deg);
            s.state0_amplitude = get_or(j, "state0_amplitude", s.state0_amplitude);
            s.state1_amplitude = get_or(j, "state1_amplitude", s.state1_amplitude);
            return s;
        }

        SweepSpec parse_sweep(const json &j)
        {
            check_keys(j, "sweep", {"theta_start_deg", "theta_stop_deg", "step_deg", "phi_deg"});
            SweepSpec s;
            s.theta_start_deg = get_or(j, "theta_start_deg", s.theta_start_deg);
            s.theta_stop_deg = get_or(j, "theta_stop_deg", s.theta_stop_deg);
            s.step_deg = get_or(j, "step_deg", s.step_deg);
            s.phi_deg = get_or(j, "phi_deg", s.phi_deg);
            return s;
        }

        HeatmapSpec parse_heatmap(const json &j)
        {
            check_keys(j, "heatmap", {"plane", "offset_m", "u_min_m", "u_max_m", "v_min_m", "v_max_m", "resolution_m"});
            HeatmapSpec h;
            const auto plane = get_or<std::string>(j, "plane", "xz");
            if (plane == "xy")
                h.plane = GridPlane::xy;
            else if (plane == "xz")
                h.plane = GridPlane::xz;
            else if (plane == "yz")
                h.plane = GridPlane::yz;
            else
                throw ConfigError("heatmap.plane must be xy, xz or yz");
            h.offset = get_or(j, "offset_m", h.offset);
            h.u_min = j.at("u_min_m").get<double>();
            h.u_max = j.at("u_max_m").get<double>();
            h.v_min = j.at("v_min_m").get<double>();
            h.v_max = j.at("v_max_m").get<double>();
            h.resolution = j.at("resolution_m").get<double>();
            return h;
        }
    } // namespace

    Scenario parse_scenario(const json &j)
    {
        try
        {
            check_keys(j, "scenario",
                       {"schema_version", "name", "description", "mode", "carrier", "boards", "sources", "receiver", "link",
                        "optimizer", "initialization", "quantize", "hardware_states", "nearfield", "power_reference",
                        "sweep", "heatmap"});
            Scenario sc;
            sc.schema_version = j.at("schema_version").get<int>();
            if (sc.schema_version != scenario_schema_version)
                throw ConfigError("unsupported schema_version " + std::to_string(sc.schema_version));
            sc.name = get_or<std::string>(j, "name", "unnamed");
            if (j.contains("description") && !j["description"].is_string())
                throw ConfigError("description must be a string");
            sc.mode = parse_mode(j.at("mode").get<std::string>());

            if (j.contains("carrier"))
            {
                check_keys(j["carrier"], "carrier", {"frequency_hz"});
                sc.settings.carrier = Carrier(j["carrier"].at("frequency_hz").get<double>());
            }
            if (j.contains("link"))
            {
                check_keys(j["link"], "link", {"attenuation"});
                sc.link.attenuation = get_or(j["link"], "attenuation", 1.0);
            }

            const auto &boards = j.at("boards");
            if (!boards.is_array())
                throw ConfigError("boards must be an array");
            for (std::size_t i = 0; i < boards.size(); ++i)
            {
                BoardSpec b = parse_board(boards[i], i);
                if (b.attenuation < 0.0 && !boards[i].contains("attenuation"))
                    b.attenuation = sc.link.attenuation;
                sc.boards.push_back(std::move(b));
            }

            const auto &sources = j.at("sources");
            if (!sources.is_array())
                throw ConfigError("sources must be an array");
            for (const auto &s : sources)
                sc.sources.push_back(parse_source(s));

            sc.receiver = parse_receiver(j.at("receiver"));

            if (j.contains("optimizer"))
            {
                sc.settings.optimizer = parse_optimizer(j["optimizer"]);
                sc.settings.normalize_objective = get_or(j["optimizer"], "normalize", true);
            }
            if (j.contains("initialization"))
            {
                const auto &init = j["initialization"];
                check_keys(init, "initialization", {"type", "seed"});
                const auto type = get_or<std::string>(init, "type", "ones");
                if (type == "ones")
                    sc.settings.init = InitKind::ones;
                else if (type == "random")
                    sc.settings.init = InitKind::random;
                else
                    throw ConfigError("initialization.type must be 'ones' or 'random'");
                sc.settings.seed = get_or<std::uint64_t>(init, "seed", 0);
            }
            sc.settings.quantize = get_or(j, "quantize", false);
            if (j.contains("hardware_states"))
                sc.settings.states = parse_states(j["hardware_states"]);
            if (j.contains("nearfield"))
            {
                check_keys(j["nearfield"], "nearfield", {"amplitude_taper"});
                sc.settings.nearfield.amplitude_taper = get_or(j["nearfield"], "amplitude_taper", false);
            }
            sc.settings.power_reference = get_or(j, "power_reference", 1.0);
            if (j.contains("sweep"))
                sc.sweep = parse_sweep(j["sweep"]);
            if (j.contains("heatmap"))
                sc.heatmap = parse_heatmap(j["heatmap"]);

            sc.validate();
            return sc;
        }
        catch (const json::exception &e)
        {
            throw ConfigError(std::string("scenario: ") + e.what());
        }
        catch (const std::invalid_argument &e)
        {
            // Carrier/Direction constructors report plain invalid_argument
            if (dynamic_cast<const ConfigError *>(&e) || dynamic_cast<const GeometryError *>(&e))
                throw;
            throw ConfigError(std::string("scenario: ") + e.what());
        }
    }

    Scenario parse_scenario_text(std::string_view text)
    {
        json j;
        try
        {
            j = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError(std::string("scenario: ") + e.what());
        }
        return parse_scenario(j);
    }

    Scenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("cannot open scenario file '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_scenario_text(ss.str());
    }
} // namespace risbeam
