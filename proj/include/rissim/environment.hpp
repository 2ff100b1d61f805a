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

#include "rissim/geometry.hpp"
#include "rissim/random.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace rissim
{
    enum class EnvironmentKind
    {
        INDOOR,
        OUTDOOR
    };

    std::string to_string(EnvironmentKind e);
    EnvironmentKind environment_from_string(const std::string &s);

    // Cluster generation statistics. Cluster means are drawn in a Tx-centred frame whose
    // boresight points horizontally towards the reference surface.
    struct EnvironmentConfig
    {
        double mean_clusters = 3.0;               // Poisson mean of the cluster count (floored at 1)
        int max_scatterers_per_cluster = 30;      // S_c ~ UniformInt[1, max]
        double azimuth_spread_deg = 5.0;          // Per-scatterer Gaussian offset around the cluster mean
        double elevation_spread_deg = 5.0;        // Per-scatterer Gaussian offset around the cluster mean
        double cluster_azimuth_range_deg = 90.0;  // Cluster mean azimuth ~ U(-range, range)
        double cluster_elevation_range_deg = 45.0; // Cluster mean elevation ~ U(-range, range)
        double min_cluster_range = 1.0;           // [m], cluster range ~ U(min, |tx - ris|)
        EnvironmentKind environment = EnvironmentKind::INDOOR;
    };

    struct Scatterer
    {
        Point3 position;
        std::complex<double> beta; // Complex path gain, CN(0, 1)
        std::size_t cluster_id = 0;
        double d_tx = 0.0;  // Tx -> scatterer [m]
        double b_ris = 0.0; // scatterer -> reference surface [m]
        double b_rx = 0.0;  // scatterer -> Rx [m]
    };

    // One realization of the shared scattering environment.
    // The same instance feeds both the Tx-RIS and the Tx-Rx channels of a trial.
    struct ClusterSet
    {
        std::vector<Scatterer> scatterers; // Grouped by cluster, cluster_id ascending
        std::vector<int> counts;           // S_c per cluster
        double gamma = 0.0;                // sqrt(1 / sum S_c), 0 for an empty set

        Point3 tx, ris, rx; // Reference points the distances were computed for

        std::size_t n_clusters() const { return counts.size(); }
        std::size_t n_scatterers() const { return scatterers.size(); }
        bool empty() const { return scatterers.empty(); }

        // Scatter-free environment (pure LOS links)
        static ClusterSet none(const Point3 &tx, const Point3 &ris, const Point3 &rx);
    };

    // Normalization sqrt(1 / sum S_c)
    double cluster_gamma(const std::vector<int> &counts);

    // Samples clusters, scatterer positions and path gains
    // - tx, ris and rx must be pairwise distinct (GeometryError otherwise)
    ClusterSet sample_clusters(const EnvironmentConfig &cfg, const Point3 &tx, const Point3 &ris, const Point3 &rx, Rng &rng);

    // Returns a copy of "clusters" with fresh CN(0, 1) path gains, geometry untouched
    ClusterSet resample_gains(const ClusterSet &clusters, Rng &rng);

    // Draws a circularly-symmetric complex normal value with unit variance
    std::complex<double> sample_cn(Rng &rng);

    // Phase excess k (b_ris - b_rx), wrapped to (-pi, pi]
    double excess_phase(const Scatterer &s, double k);

    void validate(const EnvironmentConfig &cfg, std::vector<std::string> &errors);
}
