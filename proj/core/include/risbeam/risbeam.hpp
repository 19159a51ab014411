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

#ifndef RISBEAM_RISBEAM_HPP
#define RISBEAM_RISBEAM_HPP

#include "risbeam/angles.hpp"
#include "risbeam/errors.hpp"
#include "risbeam/geometry.hpp"
#include "risbeam/manifold_opt.hpp"
#include "risbeam/nearfield_pcm.hpp"
#include "risbeam/phase_profile.hpp"
#include "risbeam/quantizer.hpp"
#include "risbeam/scenario.hpp"
#include "risbeam/signal_model.hpp"

#endif
