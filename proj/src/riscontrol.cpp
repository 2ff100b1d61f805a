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

#include "rissim/riscontrol.hpp"

#include "rissim/geometry.hpp"

#include <stdexcept>

namespace rissim
{
    std::string to_string(DirectPhaseSign s) { return s == DirectPhaseSign::paper ? "paper" : "aligned"; }

    DirectPhaseSign direct_phase_sign_from_string(const std::string &s)
    {
        if (s == "paper")
            return DirectPhaseSign::paper;
        if (s == "aligned")
            return DirectPhaseSign::aligned;
        throw std::invalid_argument("Unknown direct_phase_sign '" + s + "' (expected paper or aligned).");
    }

    double safe_arg(std::complex<double> c)
    {
        return (c.real() == 0.0 && c.imag() == 0.0) ? 0.0 : std::arg(c);
    }

    PhaseConfig optimal_phases(std::span<const std::complex<double>> g, std::span<const std::complex<double>> h,
                               std::complex<double> h_txrx, double alpha, DirectPhaseSign sign)
    {
        if (g.size() != h.size())
            throw std::invalid_argument("optimal_phases: g and h differ in length.");

        const double direct = sign == DirectPhaseSign::paper ? safe_arg(h_txrx) : -safe_arg(h_txrx);
        PhaseConfig out;
        out.alpha = alpha;
        out.phases.resize(g.size());
        for (std::size_t k = 0; k < g.size(); ++k)
            out.phases[k] = wrap_angle(-(safe_arg(g[k]) + safe_arg(h[k]) + direct));
        return out;
    }

    std::complex<double> cascade(std::span<const std::complex<double>> g, const PhaseConfig &phases,
                                 std::span<const std::complex<double>> h)
    {
        if (g.size() != h.size() || g.size() != phases.size())
            throw std::invalid_argument("cascade: g, phases and h must have equal length.");

        std::complex<double> sum = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k)
            sum += g[k] * std::polar(1.0, phases.phases[k]) * h[k];
        return phases.alpha * sum;
    }

    ElementAllocation partition_elements(std::size_t n_elements, std::size_t n_users, AllocationPolicy)
    {
        if (n_users == 0)
            throw std::invalid_argument("partition_elements: at least one user is required.");
        if (n_users > n_elements)
            throw std::invalid_argument("partition_elements: " + std::to_string(n_users) + " users exceed " +
                                        std::to_string(n_elements) + " elements.");

        ElementAllocation alloc;
        alloc.assignments.resize(n_users);
        const std::size_t base = n_elements / n_users, extra = n_elements % n_users;
        std::size_t next = 0;
        for (std::size_t u = 0; u < n_users; ++u)
        {
            const std::size_t size = base + (u < extra ? 1 : 0);
            auto &block = alloc.assignments[u];
            block.reserve(size);
            for (std::size_t i = 0; i < size; ++i)
                block.push_back(next++);
        }
        return alloc;
    }

    std::string check_allocation(const ElementAllocation &alloc, std::size_t n_elements)
    {
        std::vector<int> owner(n_elements, -1);
        for (std::size_t u = 0; u < alloc.assignments.size(); ++u)
            for (auto e : alloc.assignments[u])
            {
                if (e >= n_elements)
                    return "element " + std::to_string(e) + " of user " + std::to_string(u) + " is out of range (N = " +
                           std::to_string(n_elements) + ")";
                if (owner[e] >= 0)
                    return "element " + std::to_string(e) + " is assigned to both user " + std::to_string(owner[e]) +
                           " and user " + std::to_string(u);
                owner[e] = int(u);
            }
        return {};
    }
}
