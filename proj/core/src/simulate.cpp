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

#include "risbeam/angles.hpp"
#include "risbeam/errors.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace risbeam
{
    namespace
    {
        PhaseProfile initial_profile(std::size_t n, const RunSettings &settings, std::size_t hop)
        {
            if (settings.init == InitKind::ones)
                return PhaseProfile::uniform(n);
            std::mt19937_64 gen(settings.seed + hop);
            std::uniform_real_distribution<double> phase(-pi, pi);
            std::vector<double> omega(n);
            for (auto &o : omega)
                o = phase(gen);
            return PhaseProfile::from_phases(omega);
        }

        double power_of(const PhaseProfile &w, const SteeringVector &a, const IncidenceMatrix &B, const CVector &x,
                        const LinkBudget &link)
        {
            return std::norm(received_signal(w, a, B, x, link));
        }

        // One far-field reflection: RGD on the rank-one form, optional 1-bit quantization.
        struct LinkSolution
        {
            HopReport hop;
            double power_uniform = 0.0;
            double power_continuous = 0.0;
            std::optional<double> power_quantized;
            std::optional<std::vector<BitMatrix>> bits;
        };

        LinkSolution solve_link(const ArrayGeometry &geom, const std::vector<std::string> &ids,
                                std::span<const PlaneWaveSource> sources, const Direction &departure,
                                const LinkBudget &link, const RunSettings &settings, std::size_t hop_index,
                                bool optimize)
        {
            const SteeringVector a = steering_vector(geom, departure, settings.carrier);
            const IncidenceMatrix B = incidence_matrix(geom, sources, settings.carrier);
            const CVector x = source_amplitudes(sources);

            LinkSolution s;
            s.hop.num_elements = geom.size();
            const PhaseProfile uniform = PhaseProfile::uniform(geom.size());
            s.power_uniform = power_of(uniform, a, B, x, link);
            s.hop.power_before = s.power_uniform;
            s.hop.power_ideal = aligned_power(rank_one_factor(a, B, x, link));

            if (optimize)
            {
                QuadraticForm R = build_quadratic_form(a, B, x, link);
                const double scale = settings.normalize_objective && R.trace() > 0.0 ? R.trace() : 1.0;
                if (scale != 1.0)
                    R = QuadraticForm{R.matrix / scale};
                OptimizeResult res;
                try
                {
                    res = rgd_optimize(R, initial_profile(geom.size(), settings, hop_index), settings.optimizer);
                    for (auto &rec : res.trace.records)
                    {
                        rec.cost *= scale;
                        rec.grad_norm *= scale;
                    }
                }
                catch (const DegenerateRetraction &e)
                {
                    throw OptimizerError("hop " + std::to_string(hop_index) + ": " + e.what());
                }
                s.hop.continuous_profile = std::move(res.profile);
                s.hop.trace = std::move(res.trace);
            }
            else
                s.hop.continuous_profile = uniform;

            s.power_continuous = power_of(s.hop.continuous_profile, a, B, x, link);
            if (settings.quantize)
            {
                s.hop.final_profile = quantize_profile(s.hop.continuous_profile, settings.states);
                s.power_quantized = power_of(s.hop.final_profile, a, B, x, link);
                s.bits = to_bit_matrix(s.hop.final_profile, geom, settings.states, ids);
            }
            else
                s.hop.final_profile = s.hop.continuous_profile;

            s.hop.field_out = received_signal(s.hop.final_profile, a, B, x, link);
            s.hop.power_after = std::norm(s.hop.field_out);
            return s;
        }

        Report run_far(const Scenario &sc)
        {
            const ArrayGeometry geom = sc.world_geometry();
            const auto sources = sc.plane_wave_sources();
            const auto &departure = std::get<Direction>(sc.receiver);
            LinkSolution s = solve_link(geom, sc.board_ids(), sources, departure, sc.link, sc.settings, 0, true);

            Report r;
            r.num_elements = geom.size();
            r.power_before = s.power_uniform;
            r.power_continuous = s.power_continuous;
            r.power_quantized = s.power_quantized;
            r.power_after = s.hop.power_after;
            r.power_ideal = s.hop.power_ideal;
            r.fraunhofer_distance = fraunhofer_distance(geom, sc.settings.carrier);
            r.continuous_profile = s.hop.continuous_profile;
            r.final_profile = s.hop.final_profile;
            r.trace = s.hop.trace;
            if (s.bits)
                r.codebook = Codebook{sc.settings.carrier.frequency(), std::move(*s.bits)};
            return r;
        }

        Report run_near(const Scenario &sc)
        {
            const ArrayGeometry geom = sc.world_geometry();
            const FeedAntenna feed = std::get<FeedAntenna>(sc.sources.front());
            const auto &carrier = sc.settings.carrier;
            const auto &opts = sc.settings.nearfield;
            Report r;
            r.num_elements = geom.size();
            r.fraunhofer_distance = fraunhofer_distance(geom, carrier);

            std::function<double(const PhaseProfile &)> power;
            double ideal_amp = 0.0;
            if (const auto *dir = std::get_if<Direction>(&sc.receiver))
            {
                r.continuous_profile = pcm_profile(geom, feed, *dir, carrier);
                power = [&, d = *dir](const PhaseProfile &w) {
                    return std::norm(nearfield_array_factor(geom, feed, w, d, carrier, opts));
                };
                for (const auto &p : geom.positions())
                    ideal_amp += opts.amplitude_taper ? 1.0 / (feed.phase_center - p).norm() : 1.0;
            }
            else
            {
                const Vec3 target = std::get<Vec3>(sc.receiver);
                r.continuous_profile = pcm_focus_profile(geom, feed, target, carrier);
                power = [&, target](const PhaseProfile &w) {
                    return std::norm(nearfield_probe_field(geom, feed, w, target, carrier, opts));
                };
                for (const auto &p : geom.positions())
                    ideal_amp += opts.amplitude_taper
                                     ? 1.0 / ((feed.phase_center - p).norm() * (target - p).norm())
                                     : 1.0;
            }

            r.power_before = power(PhaseProfile::uniform(geom.size()));
            r.power_continuous = power(r.continuous_profile);
            r.power_ideal = ideal_amp * ideal_amp;
            if (sc.settings.quantize)
            {
                r.final_profile = quantize_profile(r.continuous_profile, sc.settings.states);
                r.power_quantized = power(r.final_profile);
                r.codebook = Codebook{carrier.frequency(),
                                      to_bit_matrix(r.final_profile, geom, sc.settings.states, sc.board_ids())};
            }
            else
                r.final_profile = r.continuous_profile;
            r.power_after = power(r.final_profile);
            return r;
        }

        double angle_between(const Vec3 &a, const Vec3 &b)
        {
            return std::atan2(a.cross(b).norm(), a.dot(b));
        }
    } // namespace

    double Report::gain_db() const
    {
        return power_db(power_after, power_reference) - power_db(power_before, power_reference);
    }

    HopChain make_hop_chain(const Scenario &sc)
    {
        if (sc.mode != Mode::multihop)
            throw ConfigError("make_hop_chain: scenario mode must be multihop");
        HopChain chain;
        const std::size_t n = sc.boards.size();
        for (std::size_t k = 0; k < n; ++k)
        {
            const BoardSpec &b = sc.boards[k];
            HopNode node;
            node.id = b.id;
            node.geometry = b.world_geometry();
            node.board_ids = b.tile_ids();
            node.position = b.pose.position;
            node.link = LinkBudget{b.attenuation};
            node.optimize = b.optimize;
            if (k == 0)
                node.incident = sc.plane_wave_sources();
            else
                node.incident = {PlaneWaveSource{Direction::from_vector(sc.boards[k - 1].pose.position - b.pose.position),
                                                 complex{1.0, 0.0}}};
            node.departure = (k + 1 < n) ? Direction::from_vector(sc.boards[k + 1].pose.position - b.pose.position)
                                         : std::get<Direction>(sc.receiver);
            chain.nodes.push_back(std::move(node));
        }
        chain.validate();
        return chain;
    }

    void HopChain::validate() const
    {
        if (nodes.empty())
            throw ConfigError("hop chain needs at least one node");
        for (std::size_t k = 0; k < nodes.size(); ++k)
        {
            const HopNode &node = nodes[k];
            if (node.geometry.size() == 0)
                throw GeometryError("hop " + std::to_string(k) + ": empty geometry");
            if (node.incident.empty())
                throw ConfigError("hop " + std::to_string(k) + ": no incident wave");
            if (!(node.link.attenuation >= 0.0))
                throw ConfigError("hop " + std::to_string(k) + ": attenuation must be >= 0");
            if (k + 1 == nodes.size())
                continue;
            const HopNode &next = nodes[k + 1];
            const Vec3 link = next.position - node.position;
            if (link.norm() < 1e-9)
                throw GeometryError("hops " + std::to_string(k) + " and " + std::to_string(k + 1) + " coincide");
            if (angle_between(direction_vector(node.departure), link) > 1e-9)
                throw GeometryError("hop " + std::to_string(k) + ": departure does not point at the next node");
            if (next.incident.size() != 1 || angle_between(direction_vector(next.incident.front().direction), -link) > 1e-9)
                throw GeometryError("hop " + std::to_string(k + 1) + ": incident direction does not point at the previous node");
        }
    }

    Report run_multihop(const HopChain &chain, const RunSettings &settings)
    {
        chain.validate();
        Report r;
        r.frequency_hz = settings.carrier.frequency();
        r.power_reference = settings.power_reference;

        Codebook codebook{settings.carrier.frequency(), {}};
        complex field{0.0, 0.0};
        complex uniform_field{0.0, 0.0};
        complex ideal_field{0.0, 0.0};
        for (std::size_t k = 0; k < chain.nodes.size(); ++k)
        {
            const HopNode &node = chain.nodes[k];
            std::vector<PlaneWaveSource> incident = node.incident;
            std::vector<PlaneWaveSource> uniform_incident = node.incident;
            std::vector<PlaneWaveSource> ideal_incident = node.incident;
            if (k > 0)
            {
                incident.front().amplitude = field;
                uniform_incident.front().amplitude = uniform_field;
                ideal_incident.front().amplitude = ideal_field;
            }

            LinkSolution s;
            try
            {
                s = solve_link(node.geometry, node.board_ids, incident, node.departure, node.link, settings, k,
                               node.optimize);
            }
            catch (const OptimizerError &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw OptimizerError("hop " + std::to_string(k) + ": " + e.what());
            }
            s.hop.id = node.id;
            field = s.hop.field_out;

            // Reference chains: every node uniform, and every node at its closed-form optimum.
            {
                const SteeringVector a = steering_vector(node.geometry, node.departure, settings.carrier);
                const IncidenceMatrix Bu = incidence_matrix(node.geometry, uniform_incident, settings.carrier);
                uniform_field = received_signal(PhaseProfile::uniform(node.geometry.size()), a, Bu,
                                                source_amplitudes(uniform_incident), node.link);
                const CVector xi = source_amplitudes(ideal_incident);
                const CVector u = rank_one_factor(a, Bu, xi, node.link);
                ideal_field = received_signal(aligned_profile(u), a, Bu, xi, node.link);
            }

            r.num_elements += node.geometry.size();
            if (s.bits)
                for (auto &m : *s.bits)
                    codebook.boards.push_back(std::move(m));
            r.hops.push_back(std::move(s.hop));
        }

        r.power_before = std::norm(uniform_field);
        r.power_after = std::norm(field);
        r.power_ideal = std::norm(ideal_field);
        if (settings.quantize)
        {
            r.power_quantized = r.power_after;
            r.codebook = std::move(codebook);
            // Continuous end-to-end power: replay the chain with the unquantized profiles.
            complex cont{0.0, 0.0};
            for (std::size_t k = 0; k < chain.nodes.size(); ++k)
            {
                const HopNode &node = chain.nodes[k];
                std::vector<PlaneWaveSource> incident = node.incident;
                if (k > 0)
                    incident.front().amplitude = cont;
                const SteeringVector a = steering_vector(node.geometry, node.departure, settings.carrier);
                const IncidenceMatrix B = incidence_matrix(node.geometry, incident, settings.carrier);
                cont = received_signal(r.hops[k].continuous_profile, a, B, source_amplitudes(incident), node.link);
            }
            r.power_continuous = std::norm(cont);
        }
        else
            r.power_continuous = r.power_after;

        if (chain.nodes.size() == 1)
        {
            r.continuous_profile = r.hops.front().continuous_profile;
            r.final_profile = r.hops.front().final_profile;
            r.trace = r.hops.front().trace;
            r.fraunhofer_distance = fraunhofer_distance(chain.nodes.front().geometry, settings.carrier);
        }
        return r;
    }

    Report run_scenario(const Scenario &scenario)
    {
        scenario.validate();
        Report r;
        switch (scenario.mode)
        {
        case Mode::far_rgd:
            r = run_far(scenario);
            break;
        case Mode::near_pcm:
            r = run_near(scenario);
            break;
        case Mode::multihop:
            r = run_multihop(make_hop_chain(scenario), scenario.settings);
            break;
        }
        r.scenario_name = scenario.name;
        r.mode = scenario.mode;
        r.frequency_hz = scenario.settings.carrier.frequency();
        r.power_reference = scenario.settings.power_reference;
        return r;
    }

    SweepResult sweep_pattern(const Scenario &sc, const PhaseProfile &profile, const SweepSpec &spec)
    {
        if (!(spec.step_deg > 0.0))
            throw ConfigError("sweep step must be > 0");
        if (spec.theta_stop_deg < spec.theta_start_deg)
            throw ConfigError("sweep range must satisfy start <= stop");
        if (sc.mode == Mode::multihop)
            throw ConfigError("sweep is available for far_rgd and near_pcm scenarios");

        const ArrayGeometry geom = sc.world_geometry();
        if (profile.size() != geom.size())
            throw DimensionError("sweep_pattern: profile size does not match the scenario geometry");
        const auto &carrier = sc.settings.carrier;
        const std::size_t count =
            std::size_t(std::floor((spec.theta_stop_deg - spec.theta_start_deg) / spec.step_deg + 1e-9)) + 1;

        std::function<double(const Direction &)> eval;
        std::optional<IncidenceMatrix> B;
        CVector x;
        std::vector<PlaneWaveSource> sources;
        if (sc.mode == Mode::far_rgd)
        {
            sources = sc.plane_wave_sources();
            B = incidence_matrix(geom, sources, carrier);
            x = source_amplitudes(sources);
            eval = [&](const Direction &d) {
                return std::norm(received_signal(profile, steering_vector(geom, d, carrier), *B, x, sc.link));
            };
        }
        else
        {
            const FeedAntenna feed = std::get<FeedAntenna>(sc.sources.front());
            eval = [&, feed](const Direction &d) {
                return std::norm(nearfield_array_factor(geom, feed, profile, d, carrier, sc.settings.nearfield));
            };
        }

        SweepResult out;
        out.rows.reserve(count);
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < count; ++i)
        {
            const double theta = spec.theta_start_deg + double(i) * spec.step_deg;
            const double p = eval(Direction(theta, spec.phi_deg));
            out.rows.push_back({theta, spec.phi_deg, p, power_db(p, sc.settings.power_reference)});
            if (p > best)
            {
                best = p;
                out.peak = i;
            }
        }
        return out;
    }

    CoverageGrid coverage_heatmap(const Scenario &sc, const PhaseProfile &profile, const HeatmapSpec &spec)
    {
        if (sc.mode != Mode::near_pcm)
            throw ConfigError("heatmap requires a near_pcm scenario (feed source)");
        const ArrayGeometry geom = sc.world_geometry();
        if (profile.size() != geom.size())
            throw DimensionError("coverage_heatmap: profile size does not match the scenario geometry");
        const FeedAntenna feed = std::get<FeedAntenna>(sc.sources.front());

        CoverageGrid grid;
        grid.resolution = spec.resolution;
        grid.probes = spec.probes();
        grid.power.resize(grid.probes.size());
        grid.power_db.resize(grid.probes.size());
        // Probes are independent; each slot is written by exactly one evaluation.
        for (std::size_t i = 0; i < grid.probes.size(); ++i)
        {
            grid.power[i] = std::norm(
                nearfield_probe_field(geom, feed, profile, grid.probes[i], sc.settings.carrier, sc.settings.nearfield));
            grid.power_db[i] = power_db(grid.power[i], sc.settings.power_reference);
        }
        for (std::size_t i = 1; i < grid.power.size(); ++i)
            if (grid.power[i] > grid.power[grid.peak])
                grid.peak = i;
        return grid;
    }
} // namespace risbeam
