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

#include "risbeam/quantizer.hpp"

#include "risbeam/angles.hpp"
#include "risbeam/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace risbeam
{
    void HardwareStates::validate() const
    {
        for (double p : {state0_phase_deg, state1_phase_deg})
            if (!(p >= -180.0 && p < 180.0))
                throw ConfigError("hardware state phases must lie in [-180, 180) degrees");
        for (double a : {state0_amplitude, state1_amplitude})
            if (!(a > 0.0 && a <= 1.0))
                throw ConfigError("hardware state amplitudes must lie in (0, 1]");
        if (angular_distance_deg(state0_phase_deg, state1_phase_deg) == 0.0)
            throw ConfigError("hardware states must have distinct phases");
    }

    std::complex<double> HardwareStates::coefficient(int bit) const
    {
        return std::polar(bit ? state1_amplitude : state0_amplitude, deg_to_rad(phase_deg(bit)));
    }

    int quantize_bit(double omega_deg, const HardwareStates &states)
    {
        if (!(omega_deg >= -180.0 && omega_deg < 180.0))
            throw std::invalid_argument("quantize_1bit: phase must be wrapped to [-180, 180) degrees");
        // State 0 owns [s0 - 90, s0 + 90). Compare against the wrapped bounds directly so
        // the edges are exact rather than subject to rounding in omega - s0.
        const double lo = wrap_degrees(states.state0_phase_deg - 90.0);
        const double hi = wrap_degrees(states.state0_phase_deg + 90.0);
        const bool in0 = lo < hi ? (omega_deg >= lo && omega_deg < hi) : (omega_deg >= lo || omega_deg < hi);
        return in0 ? 0 : 1;
    }

    double quantize_1bit(double omega_deg, const HardwareStates &states)
    {
        return states.phase_deg(quantize_bit(omega_deg, states));
    }

    PhaseProfile quantize_profile(const PhaseProfile &w, const HardwareStates &states)
    {
        const auto phases = w.phases_deg();
        CVector out(Eigen::Index(phases.size()));
        for (std::size_t i = 0; i < phases.size(); ++i)
            out[Eigen::Index(i)] = states.coefficient(quantize_bit(phases[i], states));
        return PhaseProfile(std::move(out), Representation::quantized);
    }

    std::vector<BitMatrix> to_bit_matrix(const PhaseProfile &w, const ArrayGeometry &geom,
                                         const HardwareStates &states, std::span<const std::string> board_ids)
    {
        if (!w.is_quantized())
            throw std::invalid_argument("to_bit_matrix: profile is not quantized");
        if (w.size() != geom.size())
            throw DimensionError("to_bit_matrix: profile has " + std::to_string(w.size()) +
                                 " entries, geometry " + std::to_string(geom.size()));
        if (!board_ids.empty() && board_ids.size() != geom.num_boards())
            throw DimensionError("to_bit_matrix: one board id per board required");

        const auto c0 = states.coefficient(0);
        const auto c1 = states.coefficient(1);
        std::vector<BitMatrix> out;
        for (std::size_t b = 0; b < geom.num_boards(); ++b)
        {
            const auto &shape = geom.boards()[b];
            BitMatrix m;
            m.id = board_ids.empty() ? std::to_string(b) : board_ids[b];
            m.rows = shape.rows;
            m.cols = shape.cols;
            m.bits.resize(shape.size());
            for (std::size_t i = 0; i < shape.size(); ++i)
            {
                const auto v = w.entries()[Eigen::Index(shape.first + i)];
                if (std::abs(v - c0) < 1e-9)
                    m.bits[i] = 0;
                else if (std::abs(v - c1) < 1e-9)
                    m.bits[i] = 1;
                else
                    throw std::invalid_argument("to_bit_matrix: element " + std::to_string(shape.first + i) +
                                                " does not match either hardware state");
            }
            out.push_back(std::move(m));
        }
        return out;
    }

    PhaseProfile from_bit_matrix(std::span<const BitMatrix> boards, const HardwareStates &states)
    {
        std::size_t n = 0;
        for (const auto &b : boards)
        {
            if (b.bits.size() != b.rows * b.cols)
                throw DimensionError("from_bit_matrix: board " + b.id + " has inconsistent size");
            n += b.bits.size();
        }
        CVector out(static_cast<Eigen::Index>(n));
        Eigen::Index k = 0;
        for (const auto &b : boards)
            for (auto bit : b.bits)
                out[k++] = states.coefficient(bit ? 1 : 0);
        return PhaseProfile(std::move(out), Representation::quantized);
    }

    namespace
    {
        std::string format_frequency(double hz)
        {
            char buf[64];
            const bool integral = std::floor(hz) == hz && std::abs(hz) < 1e18;
            auto res = integral ? std::to_chars(buf, buf + sizeof buf, hz, std::chars_format::fixed)
                                : std::to_chars(buf, buf + sizeof buf, hz);
            return std::string(buf, res.ptr);
        }

        [[noreturn]] void parse_fail(std::size_t line, const std::string &msg)
        {
            throw ConfigError("codebook line " + std::to_string(line) + ": " + msg);
        }
    } // namespace

    std::string format_codebook(const Codebook &codebook)
    {
        std::string out;
        for (std::size_t b = 0; b < codebook.boards.size(); ++b)
        {
            const auto &m = codebook.boards[b];
            if (b > 0)
                out += '\n';
            out += "board " + m.id + " " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                   " f=" + format_frequency(codebook.frequency_hz) + "\n";
            for (std::size_t r = 0; r < m.rows; ++r)
            {
                for (std::size_t c = 0; c < m.cols; ++c)
                    out += m.at(r, c) ? '1' : '0';
                out += '\n';
            }
        }
        return out;
    }

    Codebook parse_codebook(std::string_view text)
    {
        std::vector<std::string> lines;
        {
            std::string cur;
            for (char ch : text)
            {
                if (ch == '\n')
                {
                    if (!cur.empty() && cur.back() == '\r')
                        cur.pop_back();
                    lines.push_back(std::move(cur));
                    cur.clear();
                }
                else
                    cur += ch;
            }
            if (!cur.empty())
                lines.push_back(std::move(cur));
        }

        Codebook cb;
        bool have_freq = false;
        std::size_t i = 0;
        while (i < lines.size())
        {
            if (lines[i].empty())
            {
                ++i;
                continue;
            }
            std::istringstream hs(lines[i]);
            std::string kw, id, dims, freq, extra;
            hs >> kw >> id >> dims >> freq;
            if (kw != "board" || id.empty() || dims.empty() || freq.rfind("f=", 0) != 0 || (hs >> extra))
                parse_fail(i + 1, "expected 'board <id> <rows>x<cols> f=<Hz>'");

            BitMatrix m;
            m.id = id;
            const auto x = dims.find('x');
            if (x == std::string::npos)
                parse_fail(i + 1, "malformed dimensions '" + dims + "'");
            auto r1 = std::from_chars(dims.data(), dims.data() + x, m.rows);
            auto r2 = std::from_chars(dims.data() + x + 1, dims.data() + dims.size(), m.cols);
            if (r1.ec != std::errc{} || r1.ptr != dims.data() + x || r2.ec != std::errc{} ||
                r2.ptr != dims.data() + dims.size() || m.rows == 0 || m.cols == 0)
                parse_fail(i + 1, "malformed dimensions '" + dims + "'");

            double f = 0.0;
            auto rf = std::from_chars(freq.data() + 2, freq.data() + freq.size(), f);
            if (rf.ec != std::errc{} || rf.ptr != freq.data() + freq.size() || !(f > 0.0))
                parse_fail(i + 1, "malformed frequency '" + freq + "'");
            if (have_freq && f != cb.frequency_hz)
                parse_fail(i + 1, "boards disagree on frequency");
            cb.frequency_hz = f;
            have_freq = true;

            ++i;
            for (std::size_t r = 0; r < m.rows; ++r, ++i)
            {
                if (i >= lines.size() || lines[i].size() != m.cols)
                    parse_fail(i + 1, "expected a row of " + std::to_string(m.cols) + " bits for board " + m.id);
                for (char ch : lines[i])
                {
                    if (ch != '0' && ch != '1')
                        parse_fail(i + 1, "bit rows may only contain '0' and '1'");
                    m.bits.push_back(ch == '1');
                }
            }
            if (i < lines.size() && !lines[i].empty())
                parse_fail(i + 1, "expected a blank line after board " + m.id);
            cb.boards.push_back(std::move(m));
        }
        return cb;
    }

    nlohmann::json codebook_to_json(const Codebook &codebook)
    {
        nlohmann::json boards = nlohmann::json::array();
        for (const auto &m : codebook.boards)
        {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t r = 0; r < m.rows; ++r)
            {
                std::string line;
                for (std::size_t c = 0; c < m.cols; ++c)
                    line += m.at(r, c) ? '1' : '0';
                rows.push_back(line);
            }
            boards.push_back({{"id", m.id}, {"rows", m.rows}, {"cols", m.cols}, {"bits", rows}});
        }
        return {{"format", "risbeam-codebook"}, {"version", 1}, {"frequency_hz", codebook.frequency_hz},
                {"boards", boards}};
    }

    Codebook codebook_from_json(const nlohmann::json &j)
    {
        try
        {
            Codebook cb;
            cb.frequency_hz = j.at("frequency_hz").get<double>();
            for (const auto &b : j.at("boards"))
            {
                BitMatrix m;
                m.id = b.at("id").get<std::string>();
                m.rows = b.at("rows").get<std::size_t>();
                m.cols = b.at("cols").get<std::size_t>();
                const auto &rows = b.at("bits");
                if (rows.size() != m.rows)
                    throw ConfigError("codebook board " + m.id + ": row count mismatch");
                for (const auto &row : rows)
                {
                    const auto s = row.get<std::string>();
                    if (s.size() != m.cols)
                        throw ConfigError("codebook board " + m.id + ": column count mismatch");
                    for (char ch : s)
                    {
                        if (ch != '0' && ch != '1')
                            throw ConfigError("codebook board " + m.id + ": invalid bit character");
                        m.bits.push_back(ch == '1');
                    }
                }
                cb.boards.push_back(std::move(m));
            }
            return cb;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError(std::string("codebook JSON: ") + e.what());
        }
    }
} // namespace risbeam
