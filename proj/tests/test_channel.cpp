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

#include "rissim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace rissim;

namespace
{
    constexpr double pi = std::numbers::pi;
    constexpr double f73 = 73e9;

    RisDescriptor make_surface(std::size_t n, Point3 pos = {0.0, 0.0, 0.0}, Orientation o = {})
    {
        RisDescriptor r;
        r.position = pos;
        r.orient = o;
        r.n_elements = n;
        r.spacing_d = wavelength(f73) / 2.0;
        return r;
    }

    LinkParams quiet_link()
    {
        LinkParams l;
        l.los.mode = LosMode::ALWAYS;
        l.shadow_on_los = false;
        l.shadow_on_scatter = false;
        return l;
    }
}

TEST_CASE("array_response examples")
{
    const double k = wavenumber(f73);

    auto ones = array_response(make_surface(16), {0.0, 0.0}, k);
    for (auto v : ones)
        CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) <= 1e-15);

    auto single = array_response(make_surface(1), {0.7, -0.4}, k);
    REQUIRE(single.size() == 1);
    CHECK(std::abs(single[0] - std::complex<double>(1.0, 0.0)) <= 1e-15);

    // N = 4, half-wavelength spacing, elevation pi/6: phase pi/2 per step along x
    const auto a = array_response(make_surface(4), {0.0, pi / 6}, k);
    REQUIRE(a.size() == 4);
    std::vector<double> phases;
    for (auto v : a)
    {
        CHECK(std::abs(std::abs(v) - 1.0) <= 1e-12);
        phases.push_back(std::arg(v));
    }
    // Scan order: index = z * side + x, x fastest
    const double expected[4] = {0.0, pi / 2, 0.0, pi / 2};
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(phases[i] - expected[i]) <= 1e-12);
    std::sort(phases.begin(), phases.end());
    CHECK(std::abs(phases[0]) <= 1e-12);
    CHECK(std::abs(phases[1]) <= 1e-12);
    CHECK(std::abs(phases[2] - pi / 2) <= 1e-12);
    CHECK(std::abs(phases[3] - pi / 2) <= 1e-12);

    CHECK_THROWS_AS(array_response(make_surface(200), {0.0, 0.0}, k), std::invalid_argument);
    CHECK_THROWS_AS(make_surface(0).side(), std::invalid_argument);
    CHECK(make_surface(256).side() == 16);
}

TEST_CASE("array responses have unit modulus")
{
    Rng rng(4);
    std::uniform_real_distribution<double> ang(-pi / 2, pi / 2);
    const double k = wavenumber(f73);
    for (int t = 0; t < 50; ++t)
    {
        auto ris = make_surface(64);
        ris.orient.tilt_R = ang(rng);
        const Angles a{ang(rng), ang(rng)};
        for (auto v : array_response(ris, a, k))
            CHECK(std::abs(std::abs(v) - 1.0) <= 1e-12);
        for (auto v : array_response_tilted(ris, a, k))
            CHECK(std::abs(std::abs(v) - 1.0) <= 1e-12);
    }
}

TEST_CASE("tilted array response")
{
    const double k = wavenumber(f73);
    auto ris = make_surface(16);
    const double kd = k * ris.spacing_d;

    // R = 0 reduces to the untilted response
    Rng rng(8);
    std::uniform_real_distribution<double> ang(-pi / 2, pi / 2);
    for (int t = 0; t < 100; ++t)
    {
        const Angles a{ang(rng), ang(rng)};
        ris.orient.tilt_R = 0.0;
        const auto x = array_response(ris, a, k);
        const auto y = array_response_tilted(ris, a, k);
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(std::abs(x[i] - y[i]) <= 1e-12);
    }

    // R = pi/2: the z coefficient becomes -cos(phi) cos(theta)
    ris.orient.tilt_R = pi / 2;
    const Angles a{0.3, 0.2};
    const auto t = array_response_tilted(ris, a, k);
    for (std::size_t z = 0; z < 4; ++z)
        for (std::size_t x = 0; x < 4; ++x)
        {
            const double phase = kd * (double(x) * std::sin(0.2) - double(z) * std::cos(0.3) * std::cos(0.2));
            CHECK(std::abs(t[z * 4 + x] - std::polar(1.0, phase)) <= 1e-12);
        }

    // Broadside arrival on a tilted lattice: phase -k d z sin(R)
    ris.orient.tilt_R = -0.4;
    const auto b = array_response_tilted(ris, {0.0, 0.0}, k);
    for (std::size_t z = 0; z < 4; ++z)
        for (std::size_t x = 0; x < 4; ++x)
            CHECK(std::abs(b[z * 4 + x] - std::polar(1.0, -kd * double(z) * std::sin(-0.4))) <= 1e-12);
    bool all_ones = true;
    for (auto v : b)
        all_ones &= std::abs(v - 1.0) < 1e-9;
    CHECK_FALSE(all_ones);
}

TEST_CASE("doubling the frequency doubles the array phases")
{
    auto ris = make_surface(16);
    const Angles a{0.25, -0.15};
    const auto r1 = array_response(ris, a, wavenumber(f73));
    const auto r2 = array_response(ris, a, wavenumber(2.0 * f73));
    for (std::size_t i = 0; i < r1.size(); ++i)
        CHECK(std::abs(r2[i] - r1[i] * r1[i]) <= 1e-12);
}

TEST_CASE("tx_ris_channel outage and single-element LOS value")
{
    const Point3 tx{0.0, 1.0, 0.0};
    LinkParams link = quiet_link();
    link.los.mode = LosMode::NEVER;

    auto ris = make_surface(16);
    Rng rng(1);
    const auto zero = tx_ris_channel(ris, ClusterSet::none(tx, ris.position, {5.0, 5.0, 1.0}), tx, link, rng);
    REQUIRE(zero.size() == 16);
    for (auto v : zero)
        CHECK(v == std::complex<double>(0.0, 0.0));

    // N = 1, broadside at 1 m, LOS only; replay the draws to recover eta
    link.los.mode = LosMode::ALWAYS;
    auto one = make_surface(1);
    const std::uint64_t seed = 99;
    Rng draw(seed);
    bool los = false;
    const auto h = tx_ris_channel(one, ClusterSet::none(tx, one.position, {5.0, 5.0, 1.0}), tx, link, draw, &los);
    CHECK(los);

    Rng replay(seed);
    std::uniform_real_distribution<double>(0.0, 1.0)(replay);
    std::normal_distribution<double>(0.0, 1.0)(replay);
    const double eta = std::uniform_real_distribution<double>(0.0, 2.0 * pi)(replay);
    const double amp = std::sqrt(element_gain(0.0, 0.285) * db_to_power(-69.7144));
    const auto expected = std::polar(amp, eta);
    REQUIRE(h.size() == 1);
    CHECK(std::abs(h[0] - expected) <= 1e-3 * amp);
    CHECK(std::abs(std::abs(h[0]) - std::sqrt(element_gain(0.0, 0.285) * db_to_power(pathloss_db(link.pl_los, 1.0)))) <= 1e-15);
}

TEST_CASE("ris_rx_channel is rank one with the expected magnitude")
{
    auto ris = make_surface(64, {75.0, 30.0, 2.0});
    const Point3 rx{70.0, 35.0, 1.0};
    const LinkParams link = quiet_link();
    Rng rng(17);
    const auto g = ris_rx_channel(ris, rx, link, rng);

    const auto geo = arrival_geometry(ris, rx);
    const auto a = array_response(ris, geo.lattice, wavenumber(f73));
    const double mag2 = element_gain(geo.gain_theta, ris.q_pattern) * db_to_power(pathloss_db(link.pl_los, distance(ris.position, rx)));
    const auto scale = g[0] / a[0];
    for (std::size_t i = 0; i < g.size(); ++i)
    {
        CHECK(std::abs(g[i] - scale * a[i]) <= 1e-12 * std::abs(scale));
        CHECK(std::norm(g[i]) == doctest::Approx(mag2).epsilon(1e-12));
    }

    CHECK_THROWS_AS(ris_rx_channel(ris, ris.position, link, rng), GeometryError);
}

TEST_CASE("attenuation scaling is amplitude linear")
{
    const Point3 tx{0.0, 20.0, 2.0}, rx{75.0, 35.0, 1.0};
    auto ris = make_surface(16, {75.0, 30.0, 2.0});
    Rng env(3);
    const auto clusters = sample_clusters({}, tx, ris.position, rx, env);

    LinkParams base;
    LinkParams scaled = base;
    scaled.extra_loss_db = 6.0; // s^2 = 10^(-0.6)
    const double s = db_to_amplitude(-6.0);

    Rng h1(1), g1(2), d1(3), h2(1), g2(2), d2(3);
    const auto a = synthesize(ris, clusters, tx, rx, base, h1, g1, d1);
    const auto b = synthesize(ris, clusters, tx, rx, scaled, h2, g2, d2);
    for (std::size_t i = 0; i < a.h.size(); ++i)
    {
        CHECK(std::abs(b.h[i] - s * a.h[i]) <= 1e-12 * std::abs(a.h[i]) + 1e-300);
        CHECK(std::abs(b.g[i] - s * a.g[i]) <= 1e-12 * std::abs(a.g[i]));
    }
    CHECK(std::abs(b.h_siso - s * a.h_siso) <= 1e-12 * std::abs(a.h_siso));
}

TEST_CASE("direct_channel")
{
    const Point3 tx{0.0, 20.0, 2.0}, rx{75.0, 35.0, 1.0}, ris{75.0, 30.0, 2.0};
    LinkParams link = quiet_link();
    link.los.mode = LosMode::NEVER;
    const double k = wavenumber(f73);

    // One scatterer with equal path lengths to the surface and the receiver
    ClusterSet one = ClusterSet::none(tx, ris, rx);
    Scatterer s;
    s.position = {30.0, 25.0, 3.0};
    s.beta = std::polar(0.8, 1.1);
    s.d_tx = distance(tx, s.position);
    s.b_rx = distance(s.position, rx);
    s.b_ris = s.b_rx;
    one.scatterers.push_back(s);
    one.counts = {1};
    one.gamma = cluster_gamma(one.counts);
    Rng rng(5);
    const auto h = direct_channel(one, tx, rx, link, k, rng);
    CHECK(std::abs(std::arg(h) - 1.1) <= 1e-12);

    CHECK_THROWS_AS(direct_channel(one, tx, tx, link, k, rng), GeometryError);

    // Variance oracle over fresh path gains on fixed geometry
    Rng env(12);
    const auto clusters = sample_clusters({}, tx, ris, rx, env);
    double oracle = 0.0;
    for (const auto &sc : clusters.scatterers)
        oracle += db_to_power(pathloss_db(link.pl_nlos, sc.d_tx + sc.b_rx));
    oracle *= clusters.gamma * clusters.gamma;

    const int n = 10000;
    double acc = 0.0;
    Rng gains(13), draws(14);
    for (int t = 0; t < n; ++t)
        acc += std::norm(direct_channel(resample_gains(clusters, gains), tx, rx, link, k, draws));
    CHECK(std::abs(acc / n - oracle) <= 0.05 * oracle);
}

TEST_CASE("RIS validation")
{
    std::vector<std::string> errors;
    auto ris = make_surface(256, {75.0, 30.0, 2.0});
    validate(ris, "ris", errors);
    CHECK(errors.empty());
    ris.n_elements = 200;
    ris.alpha = 1.5;
    ris.spacing_d = 0.0;
    validate(ris, "ris", errors);
    CHECK(errors.size() == 3);
}
