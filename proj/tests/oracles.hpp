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

// Test-only reference computations. Nothing here calls into the library's numerical
// routines; each oracle recomputes its quantity from raw positions and angles.

#ifndef RISBEAM_TESTS_ORACLES_HPP
#define RISBEAM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle
{
    using cplx = std::complex<double>;
    constexpr double pi = 3.14159265358979323846;
    constexpr double c0 = 299792458.0;

    struct P3
    {
        double x, y, z;
    };

    inline double dot(const P3 &a, const P3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

    inline double dist(const P3 &a, const P3 &b)
    {
        const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    inline P3 unit(double theta_deg, double phi_deg)
    {
        const double t = theta_deg * pi / 180.0, p = phi_deg * pi / 180.0;
        return {std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
    }

    // y = eta * sum_i a_i w_i sum_m B_im x_m, every phase evaluated from scratch.
    inline cplx received_sum(const std::vector<P3> &pos, const std::vector<cplx> &w, const P3 &dep,
                             const std::vector<P3> &arr, const std::vector<cplx> &x, double lambda, double eta)
    {
        const double k = 2.0 * pi / lambda;
        cplx y = 0.0;
        for (std::size_t i = 0; i < pos.size(); ++i)
        {
            cplx inc = 0.0;
            for (std::size_t m = 0; m < arr.size(); ++m)
                inc += std::exp(cplx(0.0, k * dot(pos[i], arr[m]))) * x[m];
            y += eta * std::exp(cplx(0.0, k * dot(pos[i], dep))) * w[i] * inc;
        }
        return y;
    }

    // Coefficients v_i with y = sum_i v_i w_i, so the unit-modulus optimum is (sum |v_i|)^2.
    inline std::vector<cplx> element_coefficients(const std::vector<P3> &pos, const P3 &dep, const std::vector<P3> &arr,
                                                  const std::vector<cplx> &x, double lambda, double eta)
    {
        const double k = 2.0 * pi / lambda;
        std::vector<cplx> v(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i)
        {
            cplx inc = 0.0;
            for (std::size_t m = 0; m < arr.size(); ++m)
                inc += std::exp(cplx(0.0, k * dot(pos[i], arr[m]))) * x[m];
            v[i] = eta * std::exp(cplx(0.0, k * dot(pos[i], dep))) * inc;
        }
        return v;
    }

    inline double alignment_optimum(const std::vector<cplx> &v)
    {
        double s = 0.0;
        for (const auto &e : v)
            s += std::abs(e);
        return s * s;
    }

    // Central differences of a real function of N complex variables over the 2N real
    // coordinates, assembled as d/dRe + j d/dIm.
    inline std::vector<cplx> fd_gradient(const std::function<double(const std::vector<cplx> &)> &f,
                                         std::vector<cplx> w, double h)
    {
        std::vector<cplx> g(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
        {
            const cplx w0 = w[i];
            w[i] = w0 + h;
            const double fr_p = f(w);
            w[i] = w0 - h;
            const double fr_m = f(w);
            w[i] = w0 + cplx(0.0, h);
            const double fi_p = f(w);
            w[i] = w0 - cplx(0.0, h);
            const double fi_m = f(w);
            w[i] = w0;
            g[i] = cplx((fr_p - fr_m) / (2.0 * h), (fi_p - fi_m) / (2.0 * h));
        }
        return g;
    }

    // Remove the radial component of each entry: z_i - Re(z_i conj(w_i)) w_i / |w_i|^2.
    inline std::vector<cplx> project(const std::vector<cplx> &w, const std::vector<cplx> &z)
    {
        std::vector<cplx> out(z.size());
        for (std::size_t i = 0; i < z.size(); ++i)
        {
            const double radial = z[i].real() * w[i].real() + z[i].imag() * w[i].imag();
            out[i] = z[i] - radial * w[i] / std::norm(w[i]);
        }
        return out;
    }

    // max over b in {0,1}^N of |sum_i v_i s_{b_i}|^2 by exhaustive enumeration.
    inline double brute_force_1bit(const std::vector<cplx> &v, cplx s0, cplx s1)
    {
        const std::size_t n = v.size();
        double best = 0.0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
        {
            cplx acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc += v[i] * ((mask >> i) & 1u ? s1 : s0);
            best = std::max(best, std::norm(acc));
        }
        return best;
    }

    // Spherical-wave near-field sum, exp(-j k L) per path.
    inline cplx nearfield_sum(const std::vector<P3> &pos, const std::vector<cplx> &w, const P3 &feed, const P3 &dep,
                              double lambda)
    {
        const double k = 2.0 * pi / lambda;
        cplx s = 0.0;
        for (std::size_t i = 0; i < pos.size(); ++i)
            s += std::exp(cplx(0.0, -k * dist(feed, pos[i]))) * w[i] * std::exp(cplx(0.0, k * dot(pos[i], dep)));
        return s;
    }

    inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

    inline double wrapped_deg_distance(double a, double b)
    {
        double d = std::fmod(std::abs(a - b), 360.0);
        return d > 180.0 ? 360.0 - d : d;
    }
} // namespace oracle

#endif
