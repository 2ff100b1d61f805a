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

#include "doctest.h"

#include "rissim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace rissim;

namespace
{
    constexpr double pi = std::numbers::pi;

    Point3 random_point(std::mt19937_64 &rng, double scale = 50.0)
    {
        std::uniform_real_distribution<double> u(-scale, scale);
        return {u(rng), u(rng), u(rng)};
    }

    // Oracle for the untilted frames, written directly from the axis conventions:
    // XZ surface -> normal +y, horizontal +x; YZ surface -> normal +x, horizontal -y
    Angles oracle_angles(Plane plane, const Point3 &d)
    {
        const double horiz = plane == Plane::XZ ? d.x : -d.y;
        const double normal = plane == Plane::XZ ? d.y : d.x;
        return {std::atan2(horiz, normal), std::atan2(d.z, std::hypot(horiz, normal))};
    }
}

TEST_CASE("distance examples")
{
    CHECK(distance({0, 0, 0}, {0, 0, 0}) == 0.0);
    CHECK(distance({0, 20, 2}, {75, 35, 1}) == doctest::Approx(std::sqrt(75.0 * 75.0 + 15.0 * 15.0 + 1.0)).epsilon(1e-15));
    CHECK(distance({0, 20, 2}, {75, 35, 1}) == doctest::Approx(76.4919).epsilon(1e-5));
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == 5.0);
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i)
    {
        const auto a = random_point(rng), b = random_point(rng), c = random_point(rng);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("rotate_element")
{
    const Point3 p{1.5, -2.0, 0.7};
    CHECK(rotate_element(p, Axis::X, 0.0) == p);
    CHECK(rotate_element(p, Axis::Y, 0.0) == p);

    const auto r = rotate_element({0, 0, 1}, Axis::X, pi / 2);
    CHECK(r.x == doctest::Approx(0.0));
    CHECK(r.y == doctest::Approx(-1.0));
    CHECK(r.z == doctest::Approx(0.0).epsilon(1e-15));

    // Right-handed about y: z -> x
    const auto ry = rotate_element({0, 0, 1}, Axis::Y, pi / 2);
    CHECK(ry.x == doctest::Approx(1.0));
    CHECK(std::abs(ry.z) < 1e-15);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int i = 0; i < 1000; ++i)
    {
        const auto q = random_point(rng, 10.0);
        const double R = angle(rng);
        for (auto axis : {Axis::X, Axis::Y})
        {
            const auto rot = rotate_element(q, axis, R);
            CHECK(std::abs(norm(rot) - norm(q)) <= 1e-12 * norm(q));
            const auto back = rotate_element(rot, axis, -R);
            CHECK(distance(back, q) < 1e-12 * std::max(1.0, norm(q)));
        }
    }
}

TEST_CASE("angles_at_surface examples")
{
    const Orientation xz{Plane::XZ, Axis::X, 0.0};
    const Orientation yz{Plane::YZ, Axis::Y, 0.0};

    auto a = angles_at_surface({0, 0, 0}, xz, {0, 10, 0});
    CHECK(a.azimuth_phi == 0.0);
    CHECK(a.elevation_theta == 0.0);

    a = angles_at_surface({5, 5, 1}, yz, {15, 5, 1});
    CHECK(a.azimuth_phi == 0.0);
    CHECK(a.elevation_theta == 0.0);

    a = angles_at_surface({75, 30, 2}, xz, {75, 30, 12});
    CHECK(a.elevation_theta == doctest::Approx(pi / 2));

    CHECK_THROWS_AS(angles_at_surface({1, 2, 3}, xz, {1, 2, 3}), GeometryError);
}

TEST_CASE("angles_at_surface agrees with an independent frame transform")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i)
    {
        const auto s = random_point(rng), t = random_point(rng);
        const auto d = t - s;
        for (auto plane : {Plane::XZ, Plane::YZ})
        {
            const auto got = angles_at_surface(s, {plane, Orientation::default_axis(plane), 0.0}, t);
            const auto want = oracle_angles(plane, d);
            CHECK(got.elevation_theta == doctest::Approx(want.elevation_theta).epsilon(1e-12));
            CHECK(std::abs(wrap_angle(got.azimuth_phi - want.azimuth_phi)) < 1e-12);
            CHECK(got.azimuth_phi > -pi);
            CHECK(got.azimuth_phi <= pi);
            CHECK(std::abs(got.elevation_theta) <= pi / 2);
        }
    }
}

TEST_CASE("tilted frame equals rotating the target the other way")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int i = 0; i < 500; ++i)
    {
        const auto s = random_point(rng), t = random_point(rng);
        const double R = angle(rng);
        for (auto plane : {Plane::XZ, Plane::YZ})
            for (auto axis : {Axis::X, Axis::Y})
            {
                const Orientation tilted{plane, axis, R};
                const Orientation flat{plane, axis, 0.0};
                const auto a = angles_at_surface(s, tilted, t);
                const auto b = angles_at_surface(s, flat, s + rotate_element(t - s, axis, -R));
                CHECK(std::abs(a.elevation_theta - b.elevation_theta) < 1e-9);
                // azimuth is undefined at the poles
                if (std::abs(a.elevation_theta) < pi / 2 - 1e-6)
                    CHECK(std::abs(wrap_angle(a.azimuth_phi - b.azimuth_phi)) < 1e-9);
            }
    }
}

TEST_CASE("pointing_tilt levels the target")
{
    // Fig. 5 style geometries: receiver slightly below the surface centre
    const Orientation xz{Plane::XZ, Axis::X, 0.0};
    const double R = pointing_tilt({70, 30, 2}, xz, {70, 35, 1});
    CHECK(R == doctest::Approx(-std::atan(0.2)));
    CHECK(std::abs(angles_at_surface({70, 30, 2}, {Plane::XZ, Axis::X, R}, {70, 35, 1}).elevation_theta) < 1e-12);

    const Orientation yz{Plane::YZ, Axis::Y, 0.0};
    const double Ry = pointing_tilt({75, 35, 2}, yz, {70, 35, 1});
    CHECK(std::abs(angles_at_surface({75, 35, 2}, {Plane::YZ, Axis::Y, Ry}, {70, 35, 1}).elevation_theta) < 1e-12);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i)
    {
        const auto s = random_point(rng), t = random_point(rng);
        for (auto plane : {Plane::XZ, Plane::YZ})
        {
            const Orientation o{plane, Orientation::default_axis(plane), 0.0};
            const double r = pointing_tilt(s, o, t);
            CHECK(std::abs(r) <= pi / 2 + 1e-12);
            Orientation tilted = o;
            tilted.tilt_R = r;
            CHECK(std::abs(angles_at_surface(s, tilted, t).elevation_theta) < 1e-9);
        }
    }
}

TEST_CASE("wrap_angle range")
{
    CHECK(wrap_angle(pi) == pi);
    CHECK(wrap_angle(-pi) == doctest::Approx(pi));
    CHECK(wrap_angle(3 * pi) == doctest::Approx(pi));
    CHECK(wrap_angle(2 * pi + 0.25) == doctest::Approx(0.25));
    CHECK(wrap_angle(-0.5) == -0.5);
}
