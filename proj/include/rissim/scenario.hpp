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

#include "rissim/channel.hpp"
#include "rissim/environment.hpp"
#include "rissim/metrics.hpp"
#include "rissim/propagation.hpp"
#include "rissim/riscontrol.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{
    // Thrown by validate_or_throw; what() lists every violation, one per line
    class ValidationError : public std::invalid_argument
    {
    public:
        explicit ValidationError(std::vector<std::string> errors);
        const std::vector<std::string> &errors() const { return errors_; }

    private:
        std::vector<std::string> errors_;
    };

    enum class Offblock
    {
        include, // elements of other users still reflect towards every receiver
        exclude  // each user only counts its own block
    };

    std::string to_string(Offblock o);
    Offblock offblock_from_string(const std::string &s);

    struct ScenarioFlags
    {
        DirectPhaseSign direct_phase_sign = DirectPhaseSign::paper;
        Offblock offblock = Offblock::include;
        bool shadow_on_los = true;
        bool shadow_on_scatter = true;
        bool resample_geometry = true; // false: cluster geometry fixed, path gains redrawn per trial
    };

    // A surface of the scenario. Disabled surfaces contribute nothing but the first listed
    // surface still anchors the cluster geometry, so RIS-free runs see the same environment.
    struct ScenarioRis
    {
        RisDescriptor ris;
        bool enabled = true;
        std::optional<ElementAllocation> allocation; // default: CONTIGUOUS_EQUAL over the receivers
    };

    struct ScenarioConfig
    {
        Point3 tx{0.0, 20.0, 2.0};
        std::vector<Point3> rx{{75.0, 35.0, 1.0}};
        std::vector<ScenarioRis> ris_list;
        EnvironmentConfig env;
        PathlossParams pl_los = PathlossParams::los_73ghz();
        PathlossParams pl_nlos = PathlossParams::nlos_73ghz();
        LosModel los_model;
        LinkBudget budget;
        std::size_t n_trials = 10000;
        std::uint64_t master_seed = 1;
        std::size_t bootstrap_resamples = 1000;
        ScenarioFlags flags;

        LinkParams link_params() const;

        // Reference point the clusters are sampled against
        Point3 cluster_reference() const;
    };

    // Surface at "pos" with the default mounting, N elements and half-wavelength spacing at f
    ScenarioRis make_ris(const Point3 &pos, std::size_t n_elements = 256, double f = 73e9);

    // Base scenario: Tx [0, 20, 2], Rx [75, 35, 1], one 256-element surface at [75, 30, 2]
    ScenarioConfig default_scenario();

    std::vector<std::string> validate(const ScenarioConfig &cfg);
    void validate_or_throw(const ScenarioConfig &cfg);
}
