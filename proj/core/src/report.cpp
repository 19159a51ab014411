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

#include <charconv>
#include <cmath>

namespace risbeam
{
    using nlohmann::json;

    namespace
    {
        // Shortest round-trip representation; identical input gives identical text.
        std::string num(double v)
        {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, res.ptr);
        }

        json power_entry(double linear, double reference)
        {
            return {{"linear", linear}, {"db", power_db(linear, reference)}};
        }

        json trace_json(const OptimizerTrace &trace)
        {
            json records = json::array();
            long total_backtracks = 0;
            int restarts = 0;
            int escapes = 0;
            for (const auto &r : trace.records)
            {
                records.push_back({{"iteration", r.iteration},
                                   {"cost", r.cost},
                                   {"grad_norm", r.grad_norm},
                                   {"step", r.step},
                                   {"backtracks", r.backtracks},
                                   {"restarted", r.restarted},
                                   {"pr_parameter", r.pr_parameter},
                                   {"saddle_escape", r.saddle_escape}});
                total_backtracks += r.backtracks;
                restarts += r.restarted ? 1 : 0;
                escapes += r.saddle_escape ? 1 : 0;
            }
            const auto &first = trace.records.front();
            const auto &last = trace.records.back();
            return {{"stop_reason", std::string(to_string(trace.stop))},
                    {"iterations", trace.iterations()},
                    {"initial_cost", first.cost},
                    {"final_cost", last.cost},
                    {"final_grad_norm", last.grad_norm},
                    {"total_backtracks", total_backtracks},
                    {"restarts", restarts},
                    {"saddle_escapes", escapes},
                    {"records", records}};
        }

        json profile_json(const PhaseProfile &w)
        {
            return {{"representation", w.is_quantized() ? "quantized" : "continuous"}, {"phases_deg", w.phases_deg()}};
        }
    } // namespace

    json report_to_json(const Report &r)
    {
        const double ref = r.power_reference;
        json powers = {{"uniform", power_entry(r.power_before, ref)},
                       {"continuous", power_entry(r.power_continuous, ref)},
                       {"final", power_entry(r.power_after, ref)},
                       {"ideal", power_entry(r.power_ideal, ref)}};
        if (r.power_quantized)
            powers["quantized"] = power_entry(*r.power_quantized, ref);

        json j = {{"format", "risbeam-report"},
                  {"version", 1},
                  {"scenario", r.scenario_name},
                  {"mode", std::string(to_string(r.mode))},
                  {"units", {{"power", "|y|^2 (linear) and dB relative to power_reference"},
                             {"angles", "deg"},
                             {"distances", "m"},
                             {"frequency", "Hz"}}},
                  {"num_elements", r.num_elements},
                  {"frequency_hz", r.frequency_hz},
                  {"power_reference", ref},
                  {"power", powers},
                  {"gain_db", r.gain_db()}};
        j["fraunhofer_distance_m"] = r.fraunhofer_distance ? json(*r.fraunhofer_distance) : json(nullptr);
        if (r.final_profile.size() > 0)
            j["profile"] = profile_json(r.final_profile);
        j["optimizer"] = r.trace ? trace_json(*r.trace) : json(nullptr);
        j["codebook"] = r.codebook ? codebook_to_json(*r.codebook) : json(nullptr);

        if (!r.hops.empty())
        {
            json hops = json::array();
            for (std::size_t k = 0; k < r.hops.size(); ++k)
            {
                const auto &h = r.hops[k];
                hops.push_back({{"index", k},
                                {"id", h.id},
                                {"num_elements", h.num_elements},
                                {"power_before", power_entry(h.power_before, ref)},
                                {"power_after", power_entry(h.power_after, ref)},
                                {"power_ideal", power_entry(h.power_ideal, ref)},
                                {"gain_db", power_db(h.power_after, ref) - power_db(h.power_before, ref)},
                                {"field_out", {h.field_out.real(), h.field_out.imag()}},
                                {"profile", profile_json(h.final_profile)},
                                {"optimizer", h.trace ? trace_json(*h.trace) : json(nullptr)}});
            }
            j["hops"] = hops;
        }
        return j;
    }

    std::string format_report(const Report &report) { return report_to_json(report).dump(2) + "\n"; }

    std::string format_sweep_csv(const SweepResult &sweep)
    {
        std::string out = "theta_deg,phi_deg,power_linear,power_db\n";
        for (const auto &r : sweep.rows)
            out += num(r.theta_deg) + "," + num(r.phi_deg) + "," + num(r.power) + "," + num(r.power_db) + "\n";
        return out;
    }

    std::string format_heatmap_csv(const CoverageGrid &grid)
    {
        std::string out = "x_m,y_m,z_m,power_linear,power_db\n";
        for (std::size_t i = 0; i < grid.probes.size(); ++i)
        {
            const auto &p = grid.probes[i];
            out += num(p.x()) + "," + num(p.y()) + "," + num(p.z()) + "," + num(grid.power[i]) + "," +
                   num(grid.power_db[i]) + "\n";
        }
        return out;
    }

    json sweep_summary_json(const SweepResult &sweep)
    {
        if (sweep.rows.empty())
            return {{"points", 0}};
        const auto &pk = sweep.rows[sweep.peak];
        return {{"points", sweep.rows.size()},
                {"peak", {{"theta_deg", pk.theta_deg}, {"phi_deg", pk.phi_deg}, {"power_linear", pk.power}, {"power_db", pk.power_db}}}};
    }

    json heatmap_summary_json(const CoverageGrid &grid)
    {
        if (grid.probes.empty())
            return {{"points", 0}};
        const auto &p = grid.probes[grid.peak];
        return {{"points", grid.probes.size()},
                {"resolution_m", grid.resolution},
                {"peak", {{"position_m", {p.x(), p.y(), p.z()}}, {"power_linear", grid.power[grid.peak]}, {"power_db", grid.power_db[grid.peak]}}}};
    }
} // namespace risbeam
