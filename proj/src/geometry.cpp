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

#include "rissim/geometry.hpp"

#include <algorithm>

namespace rissim
{
    namespace
    {
        constexpr double coincident_tol = 1e-12; // [m]

        Point3 axis_vector(Axis a) { return a == Axis::X ? Point3{1.0, 0.0, 0.0} : Point3{0.0, 1.0, 0.0}; }
    }

    std::string to_string(Plane p) { return p == Plane::XZ ? "XZ" : "YZ"; }
    std::string to_string(Axis a) { return a == Axis::X ? "X" : "Y"; }

    Plane plane_from_string(const std::string &s)
    {
        if (s == "XZ" || s == "xz")
            return Plane::XZ;
        if (s == "YZ" || s == "yz")
            return Plane::YZ;
        throw std::invalid_argument("Unknown surface plane '" + s + "' (expected XZ or YZ).");
    }

    Axis axis_from_string(const std::string &s)
    {
        if (s == "X" || s == "x")
            return Axis::X;
        if (s == "Y" || s == "y")
            return Axis::Y;
        throw std::invalid_argument("Unknown tilt axis '" + s + "' (expected X or Y).");
    }

    double distance(const Point3 &a, const Point3 &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
    }

    Point3 rotate_element(const Point3 &coord, Axis axis, double R)
    {
        const double c = std::cos(R), s = std::sin(R);
        if (axis == Axis::X)
            return {coord.x, c * coord.y - s * coord.z, s * coord.y + c * coord.z};
        return {c * coord.x + s * coord.z, coord.y, -s * coord.x + c * coord.z};
    }

    SurfaceFrame surface_frame(const Orientation &orient)
    {
        SurfaceFrame f;
        if (orient.plane == Plane::XZ)
            f = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
        else
            f = {{0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};

        if (orient.tilt_R != 0.0)
        {
            f.horizontal = rotate_element(f.horizontal, orient.tilt_axis, orient.tilt_R);
            f.normal = rotate_element(f.normal, orient.tilt_axis, orient.tilt_R);
            f.vertical = rotate_element(f.vertical, orient.tilt_axis, orient.tilt_R);
        }
        return f;
    }

    double wrap_angle(double a)
    {
        constexpr double pi = std::numbers::pi;
        if (a > -pi && a <= pi)
            return a;
        a = std::remainder(a, 2.0 * pi); // [-pi, pi]
        return a <= -pi ? a + 2.0 * pi : a;
    }

    Angles angles_at_surface(const Point3 &surface_pos, const Orientation &orient, const Point3 &target)
    {
        const Point3 delta = target - surface_pos;
        const double r = norm(delta);
        if (!(r > coincident_tol))
            throw GeometryError("Cannot compute arrival angles: target coincides with the surface position.");

        const Point3 d = (1.0 / r) * delta;
        const SurfaceFrame f = surface_frame(orient);
        const double dh = dot(d, f.horizontal);
        const double dn = dot(d, f.normal);
        const double dv = std::clamp(dot(d, f.vertical), -1.0, 1.0);

        Angles a;
        a.elevation_theta = std::asin(dv);
        a.azimuth_phi = (dh == 0.0 && dn == 0.0) ? 0.0 : wrap_angle(std::atan2(dh, dn));
        return a;
    }

    double pointing_tilt(const Point3 &surface_pos, const Orientation &orient, const Point3 &target)
    {
        const Point3 delta = target - surface_pos;
        const double r = norm(delta);
        if (!(r > coincident_tol))
            throw GeometryError("Cannot point a surface at its own position.");

        // vertical(R) = cos R * v + sin R * (a x v) for a rotation axis a orthogonal to v
        Orientation flat = orient;
        flat.tilt_R = 0.0;
        const SurfaceFrame f = surface_frame(flat);
        const Point3 av = cross(axis_vector(orient.tilt_axis), f.vertical);
        const double cv = dot(delta, f.vertical);
        const double cav = dot(delta, av);
        if (cav == 0.0 && cv == 0.0)
            return 0.0;

        double R = std::atan2(-cv, cav);
        const double half_pi = 0.5 * std::numbers::pi;
        if (R > half_pi)
            R -= std::numbers::pi;
        else if (R < -half_pi)
            R += std::numbers::pi;
        return R;
    }
}
