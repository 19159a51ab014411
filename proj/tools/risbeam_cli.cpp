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

// risbeam command-line driver.
//
//   risbeam <optimize|pcm|quantize|sweep|heatmap|multihop> --scenario FILE [outputs] [--seed N]
//
// Errors are printed to stderr as {"error": {"kind": ..., "message": ...}} and mapped to a
// nonzero exit status: 2 config/usage, 3 geometry, 4 optimizer, 1 anything else.

#include <risbeam/risbeam.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace
{
    using namespace risbeam;
    using nlohmann::json;

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Options
    {
        std::string scenario;
        std::string report;
        std::string codebook;
        std::string codebook_json;
        std::string csv;
        std::optional<std::uint64_t> seed;
        bool quantize = false;
    };

    void write_file(const std::string &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path + "' for writing");
        out << content;
        out.close();
        if (!out)
            throw IoError("failed writing '" + path + "'");
    }

    // Empty path or "-" writes to stdout.
    void emit(const std::string &path, const std::string &content)
    {
        if (path.empty() || path == "-")
            std::cout << content << std::flush;
        else
            write_file(path, content);
    }

    Scenario load(const Options &opt)
    {
        Scenario sc = load_scenario(opt.scenario);
        if (opt.seed)
            sc.settings.seed = *opt.seed;
        if (opt.quantize)
            sc.settings.quantize = true;
        sc.validate();
        return sc;
    }

    void require_mode(const Scenario &sc, Mode mode, const char *command)
    {
        if (sc.mode != mode)
            throw ConfigError(std::string(command) + " expects a scenario with mode '" + std::string(to_string(mode)) +
                              "', got '" + std::string(to_string(sc.mode)) + "'");
    }

    void write_codebooks(const Options &opt, const Report &r)
    {
        if (opt.codebook.empty() && opt.codebook_json.empty())
            return;
        if (!r.codebook)
            throw ConfigError("codebook output requested but the scenario is not quantized (set \"quantize\": true or "
                              "pass --quantize)");
        if (!opt.codebook.empty())
            write_file(opt.codebook, format_codebook(*r.codebook));
        if (!opt.codebook_json.empty())
            write_file(opt.codebook_json, codebook_to_json(*r.codebook).dump(2) + "\n");
    }

    void run_report(const Options &opt, std::optional<Mode> mode, const char *command)
    {
        const Scenario sc = load(opt);
        if (mode)
            require_mode(sc, *mode, command);
        const Report r = run_scenario(sc);
        write_codebooks(opt, r);
        emit(opt.report, format_report(r));
    }

    void run_sweep(const Options &opt)
    {
        const Scenario sc = load(opt);
        const Report r = run_scenario(sc);
        const SweepResult sw = sweep_pattern(sc, r.final_profile, sc.sweep.value_or(SweepSpec{}));
        if (!opt.report.empty())
        {
            json j = report_to_json(r);
            j["sweep"] = sweep_summary_json(sw);
            write_file(opt.report, j.dump(2) + "\n");
        }
        write_codebooks(opt, r);
        emit(opt.csv, format_sweep_csv(sw));
    }

    void run_heatmap(const Options &opt)
    {
        const Scenario sc = load(opt);
        require_mode(sc, Mode::near_pcm, "heatmap");
        if (!sc.heatmap)
            throw ConfigError("heatmap needs a \"heatmap\" section in the scenario");
        const Report r = run_scenario(sc);
        const CoverageGrid grid = coverage_heatmap(sc, r.final_profile, *sc.heatmap);
        if (!opt.report.empty())
        {
            json j = report_to_json(r);
            j["heatmap"] = heatmap_summary_json(grid);
            write_file(opt.report, j.dump(2) + "\n");
        }
        write_codebooks(opt, r);
        emit(opt.csv, format_heatmap_csv(grid));
    }

    int fail(const std::string &kind, const std::string &message, int code)
    {
        const json j = {{"error", {{"kind", kind}, {"message", message}}}};
        std::cerr << j.dump() << std::endl;
        return code;
    }

    void add_common(CLI::App *cmd, Options &opt, bool csv)
    {
        cmd->add_option("--scenario", opt.scenario, "Scenario JSON file")->required();
        cmd->add_option("--report", opt.report, "Report JSON path (stdout when omitted)");
        cmd->add_option("--codebook", opt.codebook, "Codebook text path");
        cmd->add_option("--codebook-json", opt.codebook_json, "Codebook JSON path");
        if (csv)
            cmd->add_option("--csv", opt.csv, "CSV output path (stdout when omitted)");
        cmd->add_option("--seed", opt.seed, "Seed for a random initial profile");
        cmd->add_flag("--quantize", opt.quantize, "Force 1-bit quantization");
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Beamforming for reconfigurable intelligent surfaces", "risbeam"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "risbeam 0.1.0");

    Options opt;
    auto *optimize = app.add_subcommand("optimize", "Far-field Riemannian optimization (mode far_rgd)");
    auto *pcm = app.add_subcommand("pcm", "Near-field phase compensation (mode near_pcm)");
    auto *quantize = app.add_subcommand("quantize", "Run any scenario with 1-bit quantization and emit codebooks");
    auto *sweep = app.add_subcommand("sweep", "Departure-angle pattern of the optimized profile as CSV");
    auto *heatmap = app.add_subcommand("heatmap", "Near-field coverage grid of the PCM profile as CSV");
    auto *multihop = app.add_subcommand("multihop", "Chain of surfaces relaying one link (mode multihop)");
    for (auto *cmd : {optimize, pcm, quantize, multihop})
        add_common(cmd, opt, false);
    add_common(sweep, opt, true);
    add_common(heatmap, opt, true);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return fail("usage", e.what(), 2);
    }

    try
    {
        if (*optimize)
            run_report(opt, Mode::far_rgd, "optimize");
        else if (*pcm)
            run_report(opt, Mode::near_pcm, "pcm");
        else if (*multihop)
            run_report(opt, Mode::multihop, "multihop");
        else if (*quantize)
        {
            opt.quantize = true;
            run_report(opt, std::nullopt, "quantize");
        }
        else if (*sweep)
            run_sweep(opt);
        else if (*heatmap)
            run_heatmap(opt);
    }
    catch (const ConfigError &e)
    {
        return fail("config", e.what(), 2);
    }
    catch (const DimensionError &e)
    {
        return fail("dimension", e.what(), 2);
    }
    catch (const GeometryError &e)
    {
        return fail("geometry", e.what(), 3);
    }
    catch (const OptimizerError &e)
    {
        return fail("optimizer", e.what(), 4);
    }
    catch (const DegenerateRetraction &e)
    {
        return fail("optimizer", e.what(), 4);
    }
    catch (const IoError &e)
    {
        return fail("io", e.what(), 1);
    }
    catch (const std::invalid_argument &e)
    {
        return fail("invalid_argument", e.what(), 2);
    }
    catch (const std::exception &e)
    {
        return fail("internal", e.what(), 1);
    }
    return 0;
}
