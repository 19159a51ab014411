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

#ifndef RISBEAM_GEOMETRY_HPP
#define RISBEAM_GEOMETRY_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace risbeam
{
    using Vec3 = Eigen::Vector3d;
    using Mat3 = Eigen::Matrix3d;

    inline constexpr double speed_of_light = 299792458.0; // m/s

    // Propagation direction in degrees. theta is measured from the board normal (+z),
    // phi from +x in the board plane. Construction normalizes both angles:
    // theta to [0, 180] (180 is the -z direction) and phi to [-180, 180).
    class Direction
    {
    public:
        Direction() = default;
        Direction(double theta_deg, double phi_deg);

        // Direction of a non-zero 3-vector (need not be normalized).
        static Direction from_vector(const Vec3 &v);

        double theta_deg() const { return theta_deg_; }
        double phi_deg() const { return phi_deg_; }

    private:
        double theta_deg_ = 0.0;
        double phi_deg_ = 0.0;
    };

    // [sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)]
    Vec3 direction_vector(const Direction &dir);

    class Carrier
    {
    public:
        explicit Carrier(double frequency_hz);

        double frequency() const { return frequency_; }
        double wavelength() const { return speed_of_light / frequency_; }
        double wavenumber() const;

    private:
        double frequency_;
    };

    // Shape of one physical board inside an ArrayGeometry. Elements of a board occupy
    // positions [first, first + rows*cols) in row-major order (row index varies slowest).
    struct BoardShape
    {
        std::size_t rows = 0;
        std::size_t cols = 0;
        double spacing = 0.0; // m
        std::size_t first = 0;

        std::size_t size() const { return rows * cols; }
    };

    // Element positions of one or more boards, in meters.
    class ArrayGeometry
    {
    public:
        ArrayGeometry() = default;

        // Throws GeometryError if board extents do not cover positions exactly.
        ArrayGeometry(std::vector<Vec3> positions, std::vector<BoardShape> boards);

        std::size_t size() const { return positions_.size(); }
        const std::vector<Vec3> &positions() const { return positions_; }
        const Vec3 &position(std::size_t i) const { return positions_[i]; }
        const std::vector<BoardShape> &boards() const { return boards_; }
        std::size_t num_boards() const { return boards_.size(); }

        // Shape of the first board; convenient for single-board or homogeneous arrays.
        std::size_t rows() const { return boards_.empty() ? 0 : boards_.front().rows; }
        std::size_t cols() const { return boards_.empty() ? 0 : boards_.front().cols; }
        double spacing() const { return boards_.empty() ? 0.0 : boards_.front().spacing; }

        Vec3 centroid() const;

        // Largest distance between any two elements (aperture diameter).
        double aperture() const;

        // Rigid transform p -> rotation * p + translation for every element.
        ArrayGeometry transformed(const Mat3 &rotation, const Vec3 &translation) const;

    private:
        std::vector<Vec3> positions_;
        std::vector<BoardShape> boards_;
    };

    // rows x cols grid in the z = 0 plane centered at the origin. Columns run along +x,
    // rows run along -y so that row 0 is the top edge of the board.
    ArrayGeometry build_upa(std::size_t rows, std::size_t cols, double spacing);

    // Translated copies of `board`, one per offset, concatenated in offset order.
    // Throws GeometryError when any two elements end up closer than spacing/2.
    ArrayGeometry tile_boards(const ArrayGeometry &board, std::span<const Vec3> offsets);

    // Offsets that place grid_rows x grid_cols copies of a single board edge to edge with
    // the same pitch, centered at the origin, in row-major order.
    std::vector<Vec3> tiling_offsets(const ArrayGeometry &board, std::size_t grid_rows, std::size_t grid_cols);

    // Concatenate independent arrays (e.g. separately posed boards) into one.
    ArrayGeometry concatenate(std::span<const ArrayGeometry> parts);

    // Throws GeometryError if any two elements are closer than min_distance.
    void check_separation(const ArrayGeometry &geom, double min_distance);

    // Fraunhofer distance 2 D^2 / lambda for the geometry's aperture.
    double fraunhofer_distance(const ArrayGeometry &geom, const Carrier &carrier);

    // Rigid board pose: world = rotation * local + position.
    struct Pose
    {
        Vec3 position = Vec3::Zero();
        Mat3 rotation = Mat3::Identity();

        // Throws GeometryError unless rotation is orthonormal with det +1 (tol 1e-9).
        void validate() const;

        // Intrinsic Z-Y-X rotation (yaw about z, then pitch about y, then roll about x).
        static Mat3 rotation_from_ypr(double yaw_deg, double pitch_deg, double roll_deg);
    };
} // namespace risbeam

#endif
