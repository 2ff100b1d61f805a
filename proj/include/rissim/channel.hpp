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

#include "rissim/environment.hpp"
#include "rissim/geometry.hpp"
#include "rissim/propagation.hpp"
#include "rissim/random.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rissim
{
    using cvec = std::vector<std::complex<double>>;

    // Square planar reflecting surface with N = side^2 elements.
    // Element (x, z) sits at lattice index z * side + x (x runs fastest).
    struct RisDescriptor
    {
        Point3 position;
        Orientation orient;
        std::size_t n_elements = 256;
        double spacing_d = 0.0; // [m], element spacing
        double q_pattern = 0.285; // Element pattern exponent
        double alpha = 1.0;       // Reflection amplitude, (0, 1]

        // sqrt(N); throws std::invalid_argument for non-square N
        std::size_t side() const;
    };

    bool is_perfect_square(std::size_t n);

    // Per-link propagation settings shared by all channel builders
    struct LinkParams
    {
        PathlossParams pl_los = PathlossParams::los_73ghz();
        PathlossParams pl_nlos = PathlossParams::nlos_73ghz();
        LosModel los;
        bool shadow_on_los = true;
        bool shadow_on_scatter = true;
        double extra_loss_db = 0.0; // Uniform additional attenuation on every path
    };

    struct LosFlags
    {
        bool tx_ris = false;
        bool tx_rx = false;
        bool ris_rx = true; // the RIS-Rx hop is always LOS
    };

    // One stochastic draw of the three links of a (RIS, Rx) pair
    struct ChannelRealization
    {
        cvec h;                           // Tx -> RIS, length N
        cvec g;                           // RIS -> Rx, length N
        std::complex<double> h_siso = 0.0; // Tx -> Rx
        LosFlags los_flags;
    };

    // Direction of a point relative to a surface, split by what consumes it.
    struct ArrivalGeometry
    {
        Angles lattice;    // Angles in the untilted mounting frame (tilt enters through the lattice term)
        double gain_theta; // Elevation in the tilted frame, argument of the element pattern
    };

    ArrivalGeometry arrival_geometry(const RisDescriptor &ris, const Point3 &from);

    // Planar array response, entry exp(j k d (x sin(theta) + z sin(phi) cos(theta)))
    cvec array_response(const RisDescriptor &ris, const Angles &ang, double k);

    // Array response of the tilted lattice, using ris.orient.tilt_R:
    // exp(j k d (x sin(theta) + z cos(R) sin(phi) cos(theta) - z sin(R) cos(phi) cos(theta)))
    cvec array_response_tilted(const RisDescriptor &ris, const Angles &ang, double k);

    // Tx -> RIS channel vector h (scatter paths plus Bernoulli-gated LOS ray).
    // Consumes from "rng": LOS draw, LOS shadow, LOS phase, then one shadow draw per scatterer.
    cvec tx_ris_channel(const RisDescriptor &ris, const ClusterSet &clusters, const Point3 &tx,
                        const LinkParams &link, Rng &rng, bool *los_drawn = nullptr);

    // RIS -> Rx channel vector g (single LOS ray).
    // Consumes from "rng": LOS shadow, then the random phase.
    cvec ris_rx_channel(const RisDescriptor &ris, const Point3 &rx, const LinkParams &link, Rng &rng);

    // Direct Tx -> Rx channel through the shared clusters plus a LOS term.
    // Consumes from "rng": LOS draw, LOS shadow, LOS phase, then one shadow draw per scatterer.
    std::complex<double> direct_channel(const ClusterSet &clusters, const Point3 &tx, const Point3 &rx,
                                        const LinkParams &link, double k, Rng &rng, bool *los_drawn = nullptr);

    // All three links of one (RIS, Rx) pair from independent sub-streams
    ChannelRealization synthesize(const RisDescriptor &ris, const ClusterSet &clusters, const Point3 &tx,
                                  const Point3 &rx, const LinkParams &link, Rng &rng_h, Rng &rng_g, Rng &rng_direct);

    void validate(const RisDescriptor &ris, const std::string &name, std::vector<std::string> &errors);
}
