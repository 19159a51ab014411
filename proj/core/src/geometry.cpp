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

#include "risbeam/geometry.hpp"

#include "risbeam/angles.hpp"
#include "risbeam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risbeam
{
    Direction::Direction(double theta_deg, double phi_deg)
    {
        if (!std::isfinite(theta_deg) || !std::isfinite(phi_deg))
            throw std::invalid_argument("Direction: angles must be finite");

        // theta in (-180, 180]; negative elevation mirrors through the normal
        double t = -wrap_degrees(-theta_deg);
        double p = phi_deg;
        if (t < 0.0)
        {
            t = -t;
            p += 180.0;
        }
        theta_deg_ = t;
        phi_deg_ = wrap_degrees(p);
    }

    Direction Direction::from_vector(const Vec3 &v)
    {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("Direction::from_vector: zero or non-finite vector");
        const Vec3 u = v / n;
        const double theta = rad_to_deg(std::acos(std::clamp(u.z(), -1.0, 1.0)));
        const double phi = rad_to_deg(std::atan2(u.y(), u.x()));
        return Direction(theta, phi);
    }

    Vec3 direction_vector(const Direction &dir)
    {
        const double t = deg_to_rad(dir.theta_deg());
        const double p = deg_to_rad(dir.phi_deg());
        const double st = std::sin(t);
        return Vec3(st * std::cos(p), st * std::sin(p), std::cos(t));
    }

    Carrier::Carrier(double frequency_hz) : frequency_(frequency_hz)
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw std::invalid_argument("Carrier: frequency must be positive and finite");
    }

    double Carrier::wavenumber() const { return 2.0 * pi / wavelength(); }

    ArrayGeometry::ArrayGeometry(std::vector<Vec3> positions, std::vector<BoardShape> boards)
        : positions_(std::move(positions)), boards_(std::move(boards))
    {
        std::size_t next = 0;
        for (const auto &b : boards_)
        {
            if (b.rows == 0 || b.cols == 0 || !(b.spacing > 0.0))
                throw GeometryError("ArrayGeometry: board dimensions and spacing must be positive");
            if (b.first != next)
                throw GeometryError("ArrayGeometry: boards must cover the element list contiguously");
            next += b.size();
        }
        if (next != positions_.size())
            throw GeometryError("ArrayGeometry: board shapes describe " + std::to_string(next) +
                                " elements but " + std::to_string(positions_.size()) + " positions were given");
    }

    Vec3 ArrayGeometry::centroid() const
    {
        Vec3 c = Vec3::Zero();
        for (const auto &p : positions_)
            c += p;
        return positions_.empty() ? c : Vec3(c / double(positions_.size()));
    }

    double ArrayGeometry::aperture() const
    {
        double best = 0.0;
        for (std::size_t i = 0; i < positions_.size(); ++i)
            for (std::size_t j = i + 1; j < positions_.size(); ++j)
                best = std::max(best, (positions_[i] - positions_[j]).squaredNorm());
        return std::sqrt(best);
    }

    ArrayGeometry ArrayGeometry::transformed(const Mat3 &rotation, const Vec3 &translation) const
    {
        std::vector<Vec3> out;
        out.reserve(positions_.size());
        for (const auto &p : positions_)
            out.emplace_back(rotation * p + translation);
        return ArrayGeometry(std::move(out), boards_);
    }

    ArrayGeometry build_upa(std::size_t rows, std::size_t cols, double spacing)
    {
        if (rows == 0 || cols == 0)
            throw GeometryError("build_upa: rows and cols must be at least 1");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw GeometryError("build_upa: spacing must be positive");

        const double r0 = 0.5 * double(rows - 1);
        const double c0 = 0.5 * double(cols - 1);
        std::vector<Vec3> pos;
        pos.reserve(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                pos.emplace_back((double(c) - c0) * spacing, (r0 - double(r)) * spacing, 0.0);
        return ArrayGeometry(std::move(pos), {BoardShape{rows, cols, spacing, 0}});
    }

    void check_separation(const ArrayGeometry &geom, double min_distance)
    {
        const double min_sq = min_distance * min_distance;
        const auto &p = geom.positions();
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if ((p[i] - p[j]).squaredNorm() < min_sq)
                    throw GeometryError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                                        " overlap (closer than " + std::to_string(min_distance) + " m)");
    }

    ArrayGeometry tile_boards(const ArrayGeometry &board, std::span<const Vec3> offsets)
    {
        if (offsets.empty())
            throw GeometryError("tile_boards: at least one offset required");
        if (board.size() == 0)
            throw GeometryError("tile_boards: empty board");

        std::vector<Vec3> pos;
        std::vector<BoardShape> shapes;
        pos.reserve(board.size() * offsets.size());
        for (const auto &off : offsets)
        {
            for (auto shape : board.boards())
            {
                shape.first += pos.size();
                shapes.push_back(shape);
            }
            for (const auto &p : board.positions())
                pos.emplace_back(p + off);
        }
        ArrayGeometry out(std::move(pos), std::move(shapes));

        double min_spacing = board.boards().front().spacing;
        for (const auto &s : board.boards())
            min_spacing = std::min(min_spacing, s.spacing);
        check_separation(out, 0.5 * min_spacing);
        return out;
    }

    std::vector<Vec3> tiling_offsets(const ArrayGeometry &board, std::size_t grid_rows, std::size_t grid_cols)
    {
        if (board.num_boards() != 1)
            throw GeometryError("tiling_offsets: expects a single board");
        if (grid_rows == 0 || grid_cols == 0)
            throw GeometryError("tiling_offsets: grid dimensions must be positive");

        const double width = double(board.cols()) * board.spacing();
        const double height = double(board.rows()) * board.spacing();
        const double r0 = 0.5 * double(grid_rows - 1);
        const double c0 = 0.5 * double(grid_cols - 1);
        std::vector<Vec3> out;
        for (std::size_t r = 0; r < grid_rows; ++r)
            for (std::size_t c = 0; c < grid_cols; ++c)
                out.emplace_back((double(c) - c0) * width, (r0 - double(r)) * height, 0.0);
        return out;
    }

    ArrayGeometry concatenate(std::span<const ArrayGeometry> parts)
    {
        std::vector<Vec3> pos;
        std::vector<BoardShape> shapes;
        for (const auto &g : parts)
        {
            for (auto s : g.boards())
            {
                s.first += pos.size();
                shapes.push_back(s);
            }
            pos.insert(pos.end(), g.positions().begin(), g.positions().end());
        }
        return ArrayGeometry(std::move(pos), std::move(shapes));
    }

    double fraunhofer_distance(const ArrayGeometry &geom, const Carrier &carrier)
    {
        const double d = geom.aperture();
        return 2.0 * d * d / carrier.wavelength();
    }

    void Pose::validate() const
    {
        if (!position.allFinite() || !rotation.allFinite())
            throw GeometryError("Pose: non-finite values");
        const double ortho = (rotation.transpose() * rotation - Mat3::Identity()).cwiseAbs().maxCoeff();
        if (ortho > 1e-9)
            throw GeometryError("Pose: rotation is not orthonormal");
        if (std::abs(rotation.determinant() - 1.0) > 1e-9)
            throw GeometryError("Pose: rotation must have determinant +1");
    }

    Mat3 Pose::rotation_from_ypr(double yaw_deg, double pitch_deg, double roll_deg)
    {
        using Eigen::AngleAxisd;
        return (AngleAxisd(deg_to_rad(yaw_deg), Vec3::UnitZ()) * AngleAxisd(deg_to_rad(pitch_deg), Vec3::UnitY()) *
                AngleAxisd(deg_to_rad(roll_deg), Vec3::UnitX()))
            .toRotationMatrix();
    }
} // namespace risbeam
