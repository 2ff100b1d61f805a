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

#include "rissim/channel.hpp"

#include <cmath>
#include <numbers>

namespace rissim
{
    namespace
    {
        constexpr std::complex<double> j{0.0, 1.0};

        double uniform_phase(Rng &rng)
        {
            return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
        }

        // out[z * side + x] += coeff * exp(j (x * u + z * v)), separable over the lattice
        void accumulate_lattice(std::size_t side, double u, double v, std::complex<double> coeff,
                                std::span<std::complex<double>> out)
        {
            thread_local std::vector<std::complex<double>> ex, ez;
            ex.resize(side);
            ez.resize(side);
            for (std::size_t i = 0; i < side; ++i)
            {
                ex[i] = std::polar(1.0, double(i) * u);
                ez[i] = coeff * std::polar(1.0, double(i) * v);
            }
            for (std::size_t z = 0; z < side; ++z)
            {
                auto *row = out.data() + z * side;
                for (std::size_t x = 0; x < side; ++x)
                    row[x] += ez[z] * ex[x];
            }
        }

        // Phase increments per lattice step (x, z) of the tilted array response
        std::pair<double, double> lattice_steps(const RisDescriptor &ris, const Angles &ang, double k, double R)
        {
            const double kd = k * ris.spacing_d;
            const double st = std::sin(ang.elevation_theta), ct = std::cos(ang.elevation_theta);
            const double sp = std::sin(ang.azimuth_phi), cp = std::cos(ang.azimuth_phi);
            const double u = kd * st;
            const double v = (R == 0.0) ? kd * sp * ct : kd * (std::cos(R) * sp * ct - std::sin(R) * cp * ct);
            return {u, v};
        }

        void add_path(const RisDescriptor &ris, const Angles &lattice, double k, std::complex<double> coeff, cvec &out)
        {
            auto [u, v] = lattice_steps(ris, lattice, k, ris.orient.tilt_R);
            accumulate_lattice(ris.side(), u, v, coeff, out);
        }
    }

    bool is_perfect_square(std::size_t n)
    {
        const auto r = std::size_t(std::llround(std::sqrt(double(n))));
        return r * r == n;
    }

    std::size_t RisDescriptor::side() const
    {
        if (n_elements == 0 || !is_perfect_square(n_elements))
            throw std::invalid_argument("RIS element count " + std::to_string(n_elements) + " is not a positive perfect square.");
        return std::size_t(std::llround(std::sqrt(double(n_elements))));
    }

    ArrivalGeometry arrival_geometry(const RisDescriptor &ris, const Point3 &from)
    {
        Orientation flat = ris.orient;
        flat.tilt_R = 0.0;
        ArrivalGeometry a;
        a.lattice = angles_at_surface(ris.position, flat, from);
        a.gain_theta = ris.orient.tilt_R == 0.0 ? a.lattice.elevation_theta
                                                 : angles_at_surface(ris.position, ris.orient, from).elevation_theta;
        return a;
    }

    cvec array_response(const RisDescriptor &ris, const Angles &ang, double k)
    {
        cvec out(ris.n_elements, 0.0);
        auto [u, v] = lattice_steps(ris, ang, k, 0.0);
        accumulate_lattice(ris.side(), u, v, 1.0, out);
        return out;
    }

    cvec array_response_tilted(const RisDescriptor &ris, const Angles &ang, double k)
    {
        cvec out(ris.n_elements, 0.0);
        auto [u, v] = lattice_steps(ris, ang, k, ris.orient.tilt_R);
        accumulate_lattice(ris.side(), u, v, 1.0, out);
        return out;
    }

    cvec tx_ris_channel(const RisDescriptor &ris, const ClusterSet &clusters, const Point3 &tx,
                        const LinkParams &link, Rng &rng, bool *los_drawn)
    {
        const double k = wavenumber(link.pl_los.f);
        cvec h(ris.n_elements, 0.0);

        // LOS ray
        const double d_los = distance(tx, ris.position);
        const int los = los_indicator(link.los, d_los, ris.position.z, tx.z, rng);
        const double shadow_los = sample_shadow(link.pl_los.sigma, rng);
        const double eta = uniform_phase(rng);
        if (los_drawn)
            *los_drawn = los != 0;
        if (los)
        {
            const auto geo = arrival_geometry(ris, tx);
            const double l_lin = db_to_power(pathloss_db(link.pl_los, d_los, (link.shadow_on_los ? shadow_los : 0.0) + link.extra_loss_db));
            const double amp = std::sqrt(element_gain(geo.gain_theta, ris.q_pattern) * l_lin);
            add_path(ris, geo.lattice, k, amp * std::exp(j * eta), h);
        }

        // Scatter paths Tx -> scatterer -> RIS
        for (const auto &s : clusters.scatterers)
        {
            const double shadow = sample_shadow(link.pl_nlos.sigma, rng);
            const double b_ris = distance(s.position, ris.position);
            const double l_lin = db_to_power(pathloss_db(link.pl_nlos, s.d_tx + b_ris, (link.shadow_on_scatter ? shadow : 0.0) + link.extra_loss_db));
            const auto geo = arrival_geometry(ris, s.position);
            const double amp = std::sqrt(element_gain(geo.gain_theta, ris.q_pattern) * l_lin);
            add_path(ris, geo.lattice, k, clusters.gamma * s.beta * amp, h);
        }
        return h;
    }

    cvec ris_rx_channel(const RisDescriptor &ris, const Point3 &rx, const LinkParams &link, Rng &rng)
    {
        const double k = wavenumber(link.pl_los.f);
        const double shadow = sample_shadow(link.pl_los.sigma, rng);
        const double eta = uniform_phase(rng);

        const double d = distance(ris.position, rx);
        const auto geo = arrival_geometry(ris, rx); // throws on coincident points
        const double l_lin = db_to_power(pathloss_db(link.pl_los, d, (link.shadow_on_los ? shadow : 0.0) + link.extra_loss_db));
        const double amp = std::sqrt(element_gain(geo.gain_theta, ris.q_pattern) * l_lin);

        cvec g(ris.n_elements, 0.0);
        add_path(ris, geo.lattice, k, amp * std::exp(j * eta), g);
        return g;
    }

    std::complex<double> direct_channel(const ClusterSet &clusters, const Point3 &tx, const Point3 &rx,
                                        const LinkParams &link, double k, Rng &rng, bool *los_drawn)
    {
        const double d_los = distance(tx, rx);
        if (!(d_los > 0.0))
            throw GeometryError("Degenerate geometry: Tx and Rx coincide.");

        // The height rule only concerns surfaces, not the direct link
        LosModel direct_los = link.los;
        direct_los.force_if_above_tx = false;
        const int los = los_indicator(direct_los, d_los, rx.z, tx.z, rng);
        const double shadow_los = sample_shadow(link.pl_los.sigma, rng);
        const double eta = uniform_phase(rng);
        if (los_drawn)
            *los_drawn = los != 0;

        std::complex<double> h = 0.0;
        if (los)
        {
            const double l_lin = db_to_power(pathloss_db(link.pl_los, d_los, (link.shadow_on_los ? shadow_los : 0.0) + link.extra_loss_db));
            h += std::sqrt(l_lin) * std::exp(j * eta);
        }

        std::complex<double> scatter = 0.0;
        for (const auto &s : clusters.scatterers)
        {
            const double shadow = sample_shadow(link.pl_nlos.sigma, rng);
            Scatterer local = s;
            local.b_rx = distance(s.position, rx);
            const double l_lin = db_to_power(pathloss_db(link.pl_nlos, s.d_tx + local.b_rx, (link.shadow_on_scatter ? shadow : 0.0) + link.extra_loss_db));
            scatter += s.beta * std::exp(j * excess_phase(local, k)) * std::sqrt(l_lin);
        }
        return clusters.gamma * scatter + h;
    }

    ChannelRealization synthesize(const RisDescriptor &ris, const ClusterSet &clusters, const Point3 &tx,
                                  const Point3 &rx, const LinkParams &link, Rng &rng_h, Rng &rng_g, Rng &rng_direct)
    {
        ChannelRealization r;
        r.h = tx_ris_channel(ris, clusters, tx, link, rng_h, &r.los_flags.tx_ris);
        r.g = ris_rx_channel(ris, rx, link, rng_g);
        r.h_siso = direct_channel(clusters, tx, rx, link, wavenumber(link.pl_los.f), rng_direct, &r.los_flags.tx_rx);
        return r;
    }

    void validate(const RisDescriptor &ris, const std::string &name, std::vector<std::string> &errors)
    {
        if (!ris.position.is_finite())
            errors.push_back(name + ".position must be finite.");
        else if (ris.position.z < 0.0)
            errors.push_back(name + ".position z must be >= 0.");
        if (ris.n_elements == 0 || !is_perfect_square(ris.n_elements))
            errors.push_back(name + ".n_elements = " + std::to_string(ris.n_elements) + " is not a positive perfect square.");
        if (!(ris.spacing_d > 0.0))
            errors.push_back(name + ".spacing_d must be > 0.");
        if (!(ris.alpha > 0.0 && ris.alpha <= 1.0))
            errors.push_back(name + ".alpha must be in (0, 1].");
        if (!(ris.q_pattern >= 0.0))
            errors.push_back(name + ".q_pattern must be >= 0.");
        if (!(std::abs(ris.orient.tilt_R) <= std::numbers::pi))
            errors.push_back(name + ".orient.tilt_R must be within [-pi, pi].");
    }
}
