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

#ifndef RISBEAM_MANIFOLD_OPT_HPP
#define RISBEAM_MANIFOLD_OPT_HPP

#include "risbeam/phase_profile.hpp"
#include "risbeam/signal_model.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace risbeam
{
    // Riemannian conjugate-gradient descent on the complex circle manifold
    // M^N = { w in C^N : |w_i| = 1 }, minimizing f(w) = -w^H R w.

    struct OptimizerConfig
    {
        double epsilon = 1e-10;  // stop when ||grad f||_2 <= epsilon
        double alpha_bar = 1.0;  // initial Armijo step
        double sigma = 0.4;      // sufficient-decrease constant
        double beta = 0.5;       // backtracking shrink factor
        int max_iters = 500;
        int max_backtracks = 50;
        int max_retraction_halvings = 10;
        // When descent stops at a point where some coordinate has negative curvature (a
        // saddle, typically reached from a symmetric start), move that coordinate to its
        // exact 1-D optimum and resume.
        bool escape_saddles = true;

        // Throws ConfigError on out-of-range values.
        void validate() const;
    };

    enum class StopReason
    {
        converged,      // gradient norm reached epsilon
        max_iterations, // iteration budget exhausted
        stalled         // no sufficient decrease even along steepest descent
    };

    std::string_view to_string(StopReason reason);

    // One accepted iterate. Record 0 is the initial point (step 0, no backtracks).
    struct TraceRecord
    {
        int iteration = 0;
        double cost = 0.0;              // f(w_k) = -w_k^H R w_k
        double grad_norm = 0.0;         // ||grad f(w_k)||_2
        double step = 0.0;              // accepted alpha_k that produced w_k
        int backtracks = 0;             // m_k used for that step
        bool restarted = false;         // search direction reset to steepest descent
        double pr_parameter = 0.0;      // Polak-Ribiere value used for the next direction
        double direction_tangency = 0.0; // max_i |Re(eta_i conj(w_i))| of the next direction
        double manifold_residual = 0.0; // max_i |1 - |w_i||
        bool saddle_escape = false;     // w_k came from coordinate updates, not a line search
    };

    struct OptimizerTrace
    {
        std::vector<TraceRecord> records;
        StopReason stop = StopReason::max_iterations;

        int iterations() const { return records.empty() ? 0 : records.back().iteration; }
    };

    struct OptimizeResult
    {
        PhaseProfile profile;
        OptimizerTrace trace;
    };

    enum class ArmijoStatus
    {
        accepted,
        no_decrease // max_backtracks exhausted
    };

    struct ArmijoResult
    {
        ArmijoStatus status = ArmijoStatus::no_decrease;
        double alpha = 0.0;
        int backtracks = 0;
        PhaseProfile next; // R_w(alpha * dir) when accepted
        double next_cost = 0.0;

        bool accepted() const { return status == ArmijoStatus::accepted; }
    };

    double cost(const PhaseProfile &w, const QuadraticForm &R);

    // -2 R w
    CVector euclidean_gradient(const QuadraticForm &R, const PhaseProfile &w);

    // xi - Re{xi .* conj(w)} .* w, element-wise.
    CVector tangent_project(const CVector &w, const CVector &xi);

    CVector riemannian_gradient(const QuadraticForm &R, const PhaseProfile &w);

    // (w_i + v_i) / |w_i + v_i|. Throws DegenerateRetraction if any |w_i + v_i| < 1e-15.
    PhaseProfile retract(const PhaseProfile &w, const CVector &v);

    // Smallest m >= 0 with f(R_w(alpha_bar beta^m dir)) <= f(w) - sigma alpha_bar beta^m <dir, dir>.
    // A degenerate retraction halves the trial step (up to cfg.max_retraction_halvings times)
    // before the DegenerateRetraction is rethrown.
    ArmijoResult armijo_step(const QuadraticForm &R, const PhaseProfile &w, const CVector &dir,
                             const OptimizerConfig &cfg);

    // <g+, g+ - Proj_{w+}(g-)> / <g-, g->, with the previous gradient moved to the tangent
    // space at the new point. Returns 0 when <g-, g-> < 1e-30.
    double polak_ribiere(const CVector &grad_next, const CVector &grad_prev, const CVector &w_next);

    OptimizeResult rgd_optimize(const QuadraticForm &R, const PhaseProfile &w0, const OptimizerConfig &cfg = {});
} // namespace risbeam

#endif
