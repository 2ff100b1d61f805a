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

#include "rissim/scenario.hpp"

#include <cmath>

namespace rissim
{
    namespace
    {
        std::string join_lines(const std::vector<std::string> &errors)
        {
            std::string s = "Invalid scenario configuration:";
            for (const auto &e : errors)
                s += "\n  - " + e;
            return s;
        }

        void check_point(const Point3 &p, const std::string &name, std::vector<std::string> &errors)
        {
            if (!p.is_finite())
                errors.push_back(name + " must have finite coordinates.");
            else if (p.z < 0.0)
                errors.push_back(name + " z must be >= 0.");
        }

        void check_pathloss(const PathlossParams &p, const std::string &name, std::vector<std::string> &errors)
        {
            if (!(p.n > 0.0))
                errors.push_back(name + ".n must be > 0.");
            if (!(p.sigma >= 0.0))
                errors.push_back(name + ".sigma must be >= 0.");
            if (!(p.f > 0.0) || !(p.f0 > 0.0))
                errors.push_back(name + ".f and " + name + ".f0 must be > 0.");
            if (!std::isfinite(p.b))
                errors.push_back(name + ".b must be finite.");
        }
    }

    ValidationError::ValidationError(std::vector<std::string> errors)
        : std::invalid_argument(join_lines(errors)), errors_(std::move(errors))
    {
    }

    std::string to_string(Offblock o) { return o == Offblock::include ? "include" : "exclude"; }

    Offblock offblock_from_string(const std::string &s)
    {
        if (s == "include")
            return Offblock::include;
        if (s == "exclude")
            return Offblock::exclude;
        throw std::invalid_argument("Unknown offblock '" + s + "' (expected include or exclude).");
    }

    LinkParams ScenarioConfig::link_params() const
    {
        LinkParams l;
        l.pl_los = pl_los;
        l.pl_nlos = pl_nlos;
        l.los = los_model;
        l.shadow_on_los = flags.shadow_on_los;
        l.shadow_on_scatter = flags.shadow_on_scatter;
        return l;
    }

    Point3 ScenarioConfig::cluster_reference() const
    {
        if (!ris_list.empty())
            return ris_list.front().ris.position;
        return 0.5 * (tx + rx.front());
    }

    ScenarioRis make_ris(const Point3 &pos, std::size_t n_elements, double f)
    {
        ScenarioRis s;
        s.ris.position = pos;
        s.ris.n_elements = n_elements;
        s.ris.spacing_d = 0.5 * wavelength(f);
        return s;
    }

    ScenarioConfig default_scenario()
    {
        ScenarioConfig cfg;
        cfg.ris_list.push_back(make_ris({75.0, 30.0, 2.0}));
        return cfg;
    }

    std::vector<std::string> validate(const ScenarioConfig &cfg)
    {
        std::vector<std::string> errors;

        check_point(cfg.tx, "tx", errors);
        if (cfg.rx.empty())
            errors.push_back("At least one receiver is required (rx).");
        for (std::size_t u = 0; u < cfg.rx.size(); ++u)
        {
            const std::string name = "rx[" + std::to_string(u) + "]";
            check_point(cfg.rx[u], name, errors);
            if (!(distance(cfg.tx, cfg.rx[u]) > 0.0))
                errors.push_back(name + " coincides with tx (Tx-Rx distance must be > 0).");
        }

        for (std::size_t m = 0; m < cfg.ris_list.size(); ++m)
        {
            const auto &s = cfg.ris_list[m];
            const std::string name = "ris_list[" + std::to_string(m) + "]";
            validate(s.ris, name, errors);
            if (!(distance(cfg.tx, s.ris.position) > 0.0))
                errors.push_back(name + " coincides with tx (Tx-RIS distance must be > 0).");
            for (std::size_t u = 0; u < cfg.rx.size(); ++u)
                if (!(distance(s.ris.position, cfg.rx[u]) > 0.0))
                    errors.push_back(name + " coincides with rx[" + std::to_string(u) + "] (RIS-Rx distance must be > 0).");

            const bool square = s.ris.n_elements > 0 && is_perfect_square(s.ris.n_elements);
            if (s.allocation)
            {
                if (s.allocation->n_users() != cfg.rx.size())
                    errors.push_back(name + ".allocation has " + std::to_string(s.allocation->n_users()) +
                                     " user blocks but there are " + std::to_string(cfg.rx.size()) + " receivers.");
                if (square)
                {
                    const auto msg = check_allocation(*s.allocation, s.ris.n_elements);
                    if (!msg.empty())
                        errors.push_back(name + ".allocation: " + msg + ".");
                }
            }
            else if (square && cfg.rx.size() > s.ris.n_elements)
                errors.push_back(name + ": " + std::to_string(cfg.rx.size()) + " receivers exceed " +
                                 std::to_string(s.ris.n_elements) + " elements.");
        }
        if (cfg.ris_list.empty() && !cfg.rx.empty() && !(distance(cfg.tx, cfg.rx.front()) > 0.0))
            errors.push_back("Cluster reference is undefined when tx and rx[0] coincide.");

        validate(cfg.env, errors);
        check_pathloss(cfg.pl_los, "pl_los", errors);
        check_pathloss(cfg.pl_nlos, "pl_nlos", errors);
        if (cfg.pl_los.f != cfg.pl_nlos.f)
            errors.push_back("pl_los.f and pl_nlos.f must be the same operating frequency.");
        if (!(cfg.los_model.decay_eta > 0.0))
            errors.push_back("los_model.decay_eta must be > 0.");
        if (!std::isfinite(cfg.budget.pt_dbm) || !std::isfinite(cfg.budget.n0_dbm))
            errors.push_back("budget.pt_dbm and budget.n0_dbm must be finite.");
        if (cfg.n_trials < 1)
            errors.push_back("n_trials must be >= 1.");
        return errors;
    }

    void validate_or_throw(const ScenarioConfig &cfg)
    {
        auto errors = validate(cfg);
        if (!errors.empty())
            throw ValidationError(std::move(errors));
    }
}
