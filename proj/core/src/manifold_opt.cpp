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

#include "risbeam/manifold_opt.hpp"

#include "risbeam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace risbeam
{
    void OptimizerConfig::validate() const
    {
        if (!(epsilon > 0.0))
            throw ConfigError("optimizer.epsilon must be > 0");
        if (!(alpha_bar > 0.0))
            throw ConfigError("optimizer.alpha_bar must be > 0");
        if (!(sigma > 0.0 && sigma < 1.0))
            throw ConfigError("optimizer.sigma must lie in (0, 1)");
        if (!(beta > 0.0 && beta < 1.0))
            throw ConfigError("optimizer.beta must lie in (0, 1)");
        if (max_iters < 1)
            throw ConfigError("optimizer.max_iters must be >= 1");
        if (max_backtracks < 1)
            throw ConfigError("optimizer.max_backtracks must be >= 1");
        if (max_retraction_halvings < 0)
            throw ConfigError("optimizer.max_retraction_halvings must be >= 0");
    }

    std::string_view to_string(StopReason reason)
    {
        switch (reason)
        {
        case StopReason::converged:
            return "converged";
        case StopReason::max_iterations:
            return "max_iterations";
        case StopReason::stalled:
            return "stalled";
        }
        return "unknown";
    }

    double cost(const PhaseProfile &w, const QuadraticForm &R) { return -objective(w, R); }

    CVector euclidean_gradient(const QuadraticForm &R, const PhaseProfile &w)
    {
        if (Eigen::Index(w.size()) != R.matrix.rows())
            throw DimensionError("euclidean_gradient: size mismatch");
        return -2.0 * (R.matrix * w.entries());
    }

    CVector tangent_project(const CVector &w, const CVector &xi)
    {
        if (w.size() != xi.size())
            throw DimensionError("tangent_project: size mismatch");
        CVector z(xi.size());
        for (Eigen::Index i = 0; i < xi.size(); ++i)
            z[i] = xi[i] - (xi[i] * std::conj(w[i])).real() * w[i];
        return z;
    }

    CVector riemannian_gradient(const QuadraticForm &R, const PhaseProfile &w)
    {
        return tangent_project(w.entries(), euclidean_gradient(R, w));
    }

    PhaseProfile retract(const PhaseProfile &w, const CVector &v)
    {
        if (Eigen::Index(w.size()) != v.size())
            throw DimensionError("retract: size mismatch");
        CVector out(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i)
        {
            const std::complex<double> s = w.entries()[i] + v[i];
            const double m = std::abs(s);
            if (m < 1e-15)
                throw DegenerateRetraction("retract: |w_i + v_i| vanished at element " + std::to_string(i));
            out[i] = s / m;
        }
        return PhaseProfile(std::move(out), Representation::continuous);
    }

    ArmijoResult armijo_step(const QuadraticForm &R, const PhaseProfile &w, const CVector &dir,
                             const OptimizerConfig &cfg)
    {
        const double f0 = cost(w, R);
        const double dd = real_inner(dir, dir);
        double alpha = cfg.alpha_bar;
        int halvings = 0;

        ArmijoResult result;
        for (int m = 0; m <= cfg.max_backtracks;)
        {
            PhaseProfile trial;
            try
            {
                trial = retract(w, alpha * dir);
            }
            catch (const DegenerateRetraction &)
            {
                if (halvings++ >= cfg.max_retraction_halvings)
                    throw;
                alpha *= 0.5;
                continue;
            }

            const double f1 = cost(trial, R);
            if (f1 <= f0 - cfg.sigma * alpha * dd)
            {
                result.status = ArmijoStatus::accepted;
                result.alpha = alpha;
                result.backtracks = m;
                result.next = std::move(trial);
                result.next_cost = f1;
                return result;
            }
            alpha *= cfg.beta;
            ++m;
        }
        result.status = ArmijoStatus::no_decrease;
        result.alpha = alpha;
        result.backtracks = cfg.max_backtracks;
        return result;
    }

    double polak_ribiere(const CVector &grad_next, const CVector &grad_prev, const CVector &w_next)
    {
        const double denom = real_inner(grad_prev, grad_prev);
        if (denom < 1e-30)
            return 0.0;
        const CVector moved = tangent_project(w_next, grad_prev);
        return real_inner(grad_next, grad_next - moved) / denom;
    }

    namespace
    {
        double max_tangency(const CVector &dir, const CVector &w)
        {
            double r = 0.0;
            for (Eigen::Index i = 0; i < dir.size(); ++i)
                r = std::max(r, std::abs((dir[i] * std::conj(w[i])).real()));
            return r;
        }
    } // namespace

    namespace
    {
        // Coordinate-wise escape from a saddle. Along w_i -> w_i e^{jt} the cost has second
        // derivative 2 (Re(conj(w_i) (Rw)_i) - R_ii) at t = 0; where that is negative, w_i is
        // replaced by the phase of s_i = (Rw)_i - R_ii w_i, which minimizes f over that
        // coordinate alone. Coordinates are visited in order so every update is monotone.
        bool escape_saddle(const QuadraticForm &R, PhaseProfile &w, double f)
        {
            const Eigen::Index n = R.matrix.rows();
            const double tol = 1e-9 * (std::abs(f) + std::abs(R.matrix.trace().real())) / double(std::max<Eigen::Index>(n, 1));
            CVector v = w.entries();
            CVector Rw = R.matrix * v;
            bool moved = false;
            for (Eigen::Index i = 0; i < n; ++i)
            {
                const complex rii = R.matrix(i, i);
                const double curvature = 2.0 * ((std::conj(v[i]) * Rw[i]).real() - rii.real());
                if (!(curvature < -tol))
                    continue;
                const complex si = Rw[i] - rii * v[i];
                if (std::abs(si) == 0.0)
                    continue;
                const complex next = si / std::abs(si);
                Rw += R.matrix.col(i) * (next - v[i]);
                v[i] = next;
                moved = true;
            }
            if (moved)
                w = PhaseProfile(v, Representation::continuous);
            return moved;
        }
    } // namespace

    OptimizeResult rgd_optimize(const QuadraticForm &R, const PhaseProfile &w0, const OptimizerConfig &cfg)
    {
        cfg.validate();
        if (Eigen::Index(w0.size()) != R.matrix.rows())
            throw DimensionError("rgd_optimize: initial profile size does not match the quadratic form");
        if (w0.is_quantized() || w0.manifold_residual() > 1e-12)
            throw std::invalid_argument("rgd_optimize: initial profile must lie on the manifold");

        PhaseProfile w = w0;
        CVector grad = riemannian_gradient(R, w);
        double f = cost(w, R);
        CVector dir = -grad;
        bool steepest = true;

        OptimizeResult out;
        auto &records = out.trace.records;
        records.push_back({0, f, grad.norm(), 0.0, 0, false, 0.0, max_tangency(dir, w.entries()),
                           w.manifold_residual()});

        for (int k = 0;; ++k)
        {
            if (k >= cfg.max_iters && grad.norm() > cfg.epsilon)
            {
                out.trace.stop = StopReason::max_iterations;
                break;
            }
            auto try_escape = [&](StopReason reason) {
                out.trace.stop = reason;
                if (!cfg.escape_saddles || k >= cfg.max_iters)
                    return false;
                PhaseProfile moved = w;
                if (!escape_saddle(R, moved, f))
                    return false;
                const double f_moved = cost(moved, R);
                if (!(f_moved < f))
                    return false;
                w = std::move(moved);
                f = f_moved;
                grad = riemannian_gradient(R, w);
                dir = -grad;
                steepest = true;
                TraceRecord rec{k + 1, f, grad.norm(), 0.0, 0, true, 0.0, max_tangency(dir, w.entries()),
                                w.manifold_residual()};
                rec.saddle_escape = true;
                records.push_back(rec);
                return true;
            };
            if (grad.norm() <= cfg.epsilon)
            {
                if (try_escape(StopReason::converged))
                    continue;
                break;
            }

            // A decrease at the rounding level of f is noise; the Armijo test passes on it
            // only because f - sigma*alpha*<d,d> rounds back to f.
            const double noise = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(f);
            auto progresses = [&](const ArmijoResult &s) { return s.accepted() && f - s.next_cost > noise; };

            bool restarted = false;
            ArmijoResult step = armijo_step(R, w, dir, cfg);
            if (!progresses(step) && !steepest)
            {
                dir = -grad;
                steepest = true;
                restarted = true;
                step = armijo_step(R, w, dir, cfg);
            }
            if (!progresses(step))
            {
                // No representable decrease along -grad: stationary to working precision.
                if (try_escape(StopReason::stalled))
                    continue;
                break;
            }

            w = std::move(step.next);
            f = step.next_cost;
            CVector grad_next = riemannian_gradient(R, w);

            double u = polak_ribiere(grad_next, grad, w.entries());
            if (u < 0.0)
            {
                u = 0.0;
                restarted = true;
            }
            CVector next_dir = -grad_next + u * tangent_project(w.entries(), dir);
            if (real_inner(next_dir, grad_next) >= 0.0)
            {
                next_dir = -grad_next;
                u = 0.0;
                restarted = true;
            }
            steepest = (u == 0.0);
            dir = std::move(next_dir);
            grad = std::move(grad_next);

            records.push_back({k + 1, f, grad.norm(), step.alpha, step.backtracks, restarted, u,
                               max_tangency(dir, w.entries()), w.manifold_residual()});
        }
        out.profile = std::move(w);
        return out;
    }
} // namespace risbeam
