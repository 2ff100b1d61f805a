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

#include "rissim/environment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rissim
{
    namespace
    {
        constexpr double deg = std::numbers::pi / 180.0;
        constexpr double min_separation = 1e-9; // [m]

        void require_distinct(const Point3 &a, const Point3 &b, const char *what)
        {
            if (!(distance(a, b) > min_separation))
                throw GeometryError(std::string("Degenerate geometry: ") + what + " coincide.");
        }
    }

    std::string to_string(EnvironmentKind e) { return e == EnvironmentKind::INDOOR ? "INDOOR" : "OUTDOOR"; }

    EnvironmentKind environment_from_string(const std::string &s)
    {
        if (s == "INDOOR")
            return EnvironmentKind::INDOOR;
        if (s == "OUTDOOR")
            return EnvironmentKind::OUTDOOR;
        throw std::invalid_argument("Unknown environment '" + s + "' (expected INDOOR or OUTDOOR).");
    }

    ClusterSet ClusterSet::none(const Point3 &tx, const Point3 &ris, const Point3 &rx)
    {
        ClusterSet c;
        c.tx = tx;
        c.ris = ris;
        c.rx = rx;
        return c;
    }

    double cluster_gamma(const std::vector<int> &counts)
    {
        long total = 0;
        for (int s : counts)
            total += s;
        return total > 0 ? std::sqrt(1.0 / double(total)) : 0.0;
    }

    std::complex<double> sample_cn(Rng &rng)
    {
        std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
        const double re = dist(rng);
        const double im = dist(rng);
        return {re, im};
    }

    ClusterSet sample_clusters(const EnvironmentConfig &cfg, const Point3 &tx, const Point3 &ris, const Point3 &rx, Rng &rng)
    {
        require_distinct(tx, ris, "Tx and RIS");
        require_distinct(tx, rx, "Tx and Rx");
        require_distinct(ris, rx, "RIS and Rx");

        ClusterSet out = ClusterSet::none(tx, ris, rx);

        // Tx frame: boresight is the horizontal direction towards the surface
        Point3 boresight{ris.x - tx.x, ris.y - tx.y, 0.0};
        if (norm(boresight) < min_separation)
            boresight = {1.0, 0.0, 0.0};
        boresight = (1.0 / norm(boresight)) * boresight;
        const Point3 up{0.0, 0.0, 1.0};
        const Point3 left = cross(up, boresight);

        const double max_range = std::max(cfg.min_cluster_range, distance(tx, ris));

        const int n_clusters = std::max(1, std::poisson_distribution<int>(cfg.mean_clusters)(rng));
        std::uniform_int_distribution<int> n_scat(1, cfg.max_scatterers_per_cluster);
        std::uniform_real_distribution<double> mean_az(-cfg.cluster_azimuth_range_deg * deg, cfg.cluster_azimuth_range_deg * deg);
        std::uniform_real_distribution<double> mean_el(-cfg.cluster_elevation_range_deg * deg, cfg.cluster_elevation_range_deg * deg);
        std::uniform_real_distribution<double> range(cfg.min_cluster_range, max_range);
        std::normal_distribution<double> unit_normal(0.0, 1.0);

        for (int c = 0; c < n_clusters; ++c)
        {
            const int s_c = n_scat(rng);
            const double az_c = mean_az(rng);
            const double el_c = mean_el(rng);
            const double r_c = range(rng);
            out.counts.push_back(s_c);

            for (int s = 0; s < s_c; ++s)
            {
                const double az = az_c + cfg.azimuth_spread_deg * deg * unit_normal(rng);
                const double el = el_c + cfg.elevation_spread_deg * deg * unit_normal(rng);
                const Point3 dir = std::cos(el) * (std::cos(az) * boresight + std::sin(az) * left) + std::sin(el) * up;

                Scatterer sc;
                sc.position = tx + r_c * dir;
                sc.position.z = std::abs(sc.position.z); // mirror below-ground points
                sc.cluster_id = std::size_t(c);
                sc.beta = sample_cn(rng);
                sc.d_tx = distance(tx, sc.position);
                sc.b_ris = distance(sc.position, ris);
                sc.b_rx = distance(sc.position, rx);
                if (!(sc.d_tx > min_separation && sc.b_ris > min_separation && sc.b_rx > min_separation))
                    throw GeometryError("Degenerate geometry: sampled scatterer coincides with an endpoint.");
                out.scatterers.push_back(sc);
            }
        }

        out.gamma = cluster_gamma(out.counts);
        return out;
    }

    ClusterSet resample_gains(const ClusterSet &clusters, Rng &rng)
    {
        ClusterSet out = clusters;
        for (auto &s : out.scatterers)
            s.beta = sample_cn(rng);
        return out;
    }

    double excess_phase(const Scatterer &s, double k)
    {
        return wrap_angle(k * (s.b_ris - s.b_rx));
    }

    void validate(const EnvironmentConfig &cfg, std::vector<std::string> &errors)
    {
        if (!(cfg.mean_clusters > 0.0))
            errors.push_back("env.mean_clusters must be > 0.");
        if (cfg.max_scatterers_per_cluster < 1)
            errors.push_back("env.max_scatterers_per_cluster must be >= 1.");
        if (!(cfg.azimuth_spread_deg >= 0.0) || !(cfg.elevation_spread_deg >= 0.0))
            errors.push_back("env angular spreads must be >= 0.");
        if (!(cfg.cluster_azimuth_range_deg >= 0.0) || !(cfg.cluster_elevation_range_deg >= 0.0))
            errors.push_back("env cluster angle ranges must be >= 0.");
        if (!(cfg.min_cluster_range > 0.0))
            errors.push_back("env.min_cluster_range must be > 0.");
    }
}
