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
#include "rissim/scenario.hpp"

#include "json.hpp"

#include <string>

namespace rissim
{
    using json = nlohmann::ordered_json;

    // Scenario configuration <-> JSON. Field names mirror ScenarioConfig; missing fields take
    // their defaults, unknown fields are rejected with the offending path.
    json to_json(const ScenarioConfig &cfg);
    ScenarioConfig scenario_from_json(const json &j);

    ScenarioConfig load_scenario(const std::string &path);

    // ClusterSet fixtures; complex gains are stored as [re, im] pairs
    json to_json(const ClusterSet &clusters);
    ClusterSet cluster_set_from_json(const json &j);

    void save_cluster_set(const ClusterSet &clusters, const std::string &path);
    ClusterSet load_cluster_set(const std::string &path);

    // Sets "path" (dot separated, numeric components index arrays) inside "j".
    // The value text is parsed as JSON, falling back to a plain string.
    // Returns false if an intermediate component does not exist.
    bool apply_override(json &j, const std::string &path, const std::string &value_text);

    // 9 significant digits, as used by every numeric output
    std::string format_number(double v);
}
