// SPDX-License-Identifier: Apache-2.0
//
// rissim - stochastic channel simulator for RIS-assisted radio environments
// Copyright (C) 2026 The rissim authors
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

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rissim
{
    // Thrown when two points that must be distinct coincide (or nearly so).
    class GeometryError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    struct Point3
    {
        double x = 0.0; // [m]
        double y = 0.0; // [m]
        double z = 0.0; // [m]

        friend Point3 operator+(const Point3 &a, const Point3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
        friend Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
        friend Point3 operator*(double s, const Point3 &a) { return {s * a.x, s * a.y, s * a.z}; }
        friend bool operator==(const Point3 &, const Point3 &) = default;

        bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
    };

    inline double dot(const Point3 &a, const Point3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    inline Point3 cross(const Point3 &a, const Point3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    inline double norm(const Point3 &a) { return std::sqrt(dot(a, a)); }

    enum class Plane
    {
        XZ, // broadside +y
        YZ  // broadside +x
    };

    enum class Axis
    {
        X,
        Y
    };

    // Mounting plane of a surface plus a mechanical tilt about a world axis.
    struct Orientation
    {
        Plane plane = Plane::XZ;
        Axis tilt_axis = Axis::X;
        double tilt_R = 0.0; // [rad], within [-pi, pi]

        // XZ pairs with a tilt about x, YZ with a tilt about y
        static Axis default_axis(Plane p) { return p == Plane::XZ ? Axis::X : Axis::Y; }
    };

    // Direction of a target in a surface's local frame.
    // Azimuth is measured in the horizontal plane from broadside, elevation from that plane.
    struct Angles
    {
        double azimuth_phi = 0.0;     // (-pi, pi]
        double elevation_theta = 0.0; // [-pi/2, pi/2]
    };

    // Orthonormal local frame of a (possibly tilted) surface.
    // horizontal x normal = vertical (right-handed).
    struct SurfaceFrame
    {
        Point3 horizontal;
        Point3 normal;
        Point3 vertical;
    };

    std::string to_string(Plane p);
    std::string to_string(Axis a);
    Plane plane_from_string(const std::string &s);
    Axis axis_from_string(const std::string &s);

    double distance(const Point3 &a, const Point3 &b);

    // Right-handed rotation of a coordinate about the world x or y axis
    Point3 rotate_element(const Point3 &coord, Axis axis, double R);

    // Local frame after applying the orientation's tilt to the mounting plane
    SurfaceFrame surface_frame(const Orientation &orient);

    // Azimuth / elevation of "target" seen from a surface at "surface_pos"
    // - Broadside maps to (0, 0), the zenith to elevation pi/2
    // - Throws GeometryError if the points coincide
    Angles angles_at_surface(const Point3 &surface_pos, const Orientation &orient, const Point3 &target);

    // Tilt angle (within [-pi/2, pi/2]) that brings "target" to zero elevation in the tilted frame.
    // Used to build the "point towards the receiver" scenarios.
    double pointing_tilt(const Point3 &surface_pos, const Orientation &orient, const Point3 &target);

    // Wraps an angle to (-pi, pi]
    double wrap_angle(double a);
}
