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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rissim
{
    // Diagonal of the RIS reflection matrix: alpha * exp(j phases[k])
    struct PhaseConfig
    {
        std::vector<double> phases; // (-pi, pi]
        double alpha = 1.0;

        std::size_t size() const { return phases.size(); }
    };

    // How the direct-link phase enters the optimal configuration.
    //  paper:   phases[k] = -(arg g_k + arg h_k + arg h_txrx)
    //  aligned: phases[k] = -(arg g_k + arg h_k) + arg h_txrx (cascade co-phased with the direct link)
    enum class DirectPhaseSign
    {
        paper,
        aligned
    };

    std::string to_string(DirectPhaseSign s);
    DirectPhaseSign direct_phase_sign_from_string(const std::string &s);

    // arg with arg(0) := 0
    double safe_arg(std::complex<double> c);

    PhaseConfig optimal_phases(std::span<const std::complex<double>> g, std::span<const std::complex<double>> h,
                               std::complex<double> h_txrx, double alpha,
                               DirectPhaseSign sign = DirectPhaseSign::paper);

    // g^T * diag(alpha exp(j phases)) * h
    // Throws std::invalid_argument on length mismatch
    std::complex<double> cascade(std::span<const std::complex<double>> g, const PhaseConfig &phases,
                                 std::span<const std::complex<double>> h);

    enum class AllocationPolicy
    {
        CONTIGUOUS_EQUAL
    };

    // User index -> element indices (ascending)
    struct ElementAllocation
    {
        std::vector<std::vector<std::size_t>> assignments;

        std::size_t n_users() const { return assignments.size(); }
    };

    // Contiguous blocks in lattice scan order; the first N mod U users get one extra element
    // Throws std::invalid_argument for U = 0 or U > N
    ElementAllocation partition_elements(std::size_t n_elements, std::size_t n_users,
                                         AllocationPolicy policy = AllocationPolicy::CONTIGUOUS_EQUAL);

    // Empty if the allocation is valid for n_elements, otherwise a description of the first violation
    std::string check_allocation(const ElementAllocation &alloc, std::size_t n_elements);
}
