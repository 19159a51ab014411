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

#ifndef RISBEAM_ERRORS_HPP
#define RISBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace risbeam
{
    // Malformed scenario file or out-of-range configuration value.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Overlapping elements, coincident feed/probe, ill-formed pose.
    class GeometryError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Vector/matrix sizes that do not agree.
    class DimensionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // |w_i + v_i| vanished during retraction.
    class DegenerateRetraction : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class OptimizerError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
} // namespace risbeam

#endif
