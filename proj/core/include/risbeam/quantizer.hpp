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

#ifndef RISBEAM_QUANTIZER_HPP
#define RISBEAM_QUANTIZER_HPP

#include "risbeam/geometry.hpp"
#include "risbeam/phase_profile.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risbeam
{
    // The two reflection states of a 1-bit element. Bit 0 selects state 0, bit 1 state 1.
    struct HardwareStates
    {
        double state0_phase_deg = -25.0;
        double state1_phase_deg = 156.0;
        double state0_amplitude = 1.0;
        double state1_amplitude = 1.0;

        // Throws ConfigError unless phases are in [-180, 180) and amplitudes in (0, 1].
        void validate() const;

        double phase_deg(int bit) const { return bit ? state1_phase_deg : state0_phase_deg; }
        std::complex<double> coefficient(int bit) const;
    };

    // State index for a wrapped continuous phase: 0 on [state0 - 90, state0 + 90),
    // 1 elsewhere. With the default states this is -115 <= omega < 65 -> 0.
    // Throws std::invalid_argument if omega_deg is outside [-180, 180).
    int quantize_bit(double omega_deg, const HardwareStates &states = {});

    // Quantized phase in degrees for a wrapped continuous phase.
    double quantize_1bit(double omega_deg, const HardwareStates &states = {});

    PhaseProfile quantize_profile(const PhaseProfile &w, const HardwareStates &states = {});

    // rows x cols grid of one board, row-major, 1 = state 1.
    struct BitMatrix
    {
        std::string id;
        std::size_t rows = 0;
        std::size_t cols = 0;
        std::vector<std::uint8_t> bits;

        std::uint8_t at(std::size_t r, std::size_t c) const { return bits[r * cols + c]; }
        bool operator==(const BitMatrix &) const = default;
    };

    struct Codebook
    {
        double frequency_hz = 0.0;
        std::vector<BitMatrix> boards;

        bool operator==(const Codebook &) const = default;
    };

    // One BitMatrix per board of `geom`. Throws std::invalid_argument if `w` is not a
    // quantized profile whose entries all match one of the two states, and DimensionError
    // if its size differs from the geometry. Board ids default to their index.
    std::vector<BitMatrix> to_bit_matrix(const PhaseProfile &w, const ArrayGeometry &geom,
                                         const HardwareStates &states = {},
                                         std::span<const std::string> board_ids = {});

    PhaseProfile from_bit_matrix(std::span<const BitMatrix> boards, const HardwareStates &states = {});

    // Text payload:
    //   board <id> <rows>x<cols> f=<Hz>
    //   0101...
    // one block per board, blocks separated by a blank line.
    std::string format_codebook(const Codebook &codebook);
    Codebook parse_codebook(std::string_view text);

    nlohmann::json codebook_to_json(const Codebook &codebook);
    Codebook codebook_from_json(const nlohmann::json &j);
} // namespace risbeam

#endif
