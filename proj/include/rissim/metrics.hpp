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

#include "rissim/random.hpp"
#include "rissim/riscontrol.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rissim
{
    struct LinkBudget
    {
        double pt_dbm = 30.0;  // Transmit power [dBm]
        double n0_dbm = -100.0; // Noise power [dBm]
    };

    inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double watt_to_dbm(double w);

    // One RIS contribution g^T Phi h to the end-to-end channel
    struct RisLink
    {
        std::span<const std::complex<double>> g;
        const PhaseConfig *phases = nullptr;
        std::span<const std::complex<double>> h;
    };

    // sum over surfaces of g^T Phi h, plus the direct term
    std::complex<double> effective_channel(std::span<const RisLink> links, std::complex<double> h_txrx);

    // Linear SNR: Pt |H|^2 / N0
    double snr(std::complex<double> H, const LinkBudget &budget);

    double rate_from_snr(double snr_linear);

    struct MetricsResult
    {
        double ergodic_rate = 0.0;   // E[log2(1 + SNR)] [b/s/Hz]
        double mean_snr_db = 0.0;    // 10 log10(E[SNR])
        double mean_of_snr_db = 0.0; // E[10 log10(SNR)], SNR floored at 1e-30
        double rate_ci_low = 0.0;    // Bootstrap percentile interval of the ergodic rate
        double rate_ci_high = 0.0;
        std::vector<double> rate_samples;
        std::vector<double> snr_samples;
        std::size_t n_trials = 0;
        std::uint64_t seed = 0;
    };

    // Aggregates per-trial effective channels. The per-trial order of "H" defines the reduction
    // order, so the result does not depend on how the trials were scheduled.
    MetricsResult ergodic_rate(std::span<const std::complex<double>> H, const LinkBudget &budget,
                               std::uint64_t seed = 0, std::size_t bootstrap_resamples = 1000,
                               double confidence = 0.95);

    // Sorted (value, i/n) steps; throws std::invalid_argument on empty input
    std::vector<std::pair<double, double>> empirical_cdf(std::span<const double> samples);

    // (N + 1)^2 Pt (lambda / (4 pi d))^2, Pt in watts
    double received_power_approx(double n_elements, double pt, double d, double lambda);

    // Pairwise summation; deterministic for a given element order
    double pairwise_sum(std::span<const double> v);
    inline double mean(std::span<const double> v) { return v.empty() ? 0.0 : pairwise_sum(v) / double(v.size()); }

    struct Interval
    {
        double estimate = 0.0;
        double low = 0.0;
        double high = 0.0;
    };

    // Percentile bootstrap interval of the sample mean
    Interval bootstrap_mean_ci(std::span<const double> samples, std::size_t resamples, double confidence, Rng &rng);

    // Percentile bootstrap interval of mean(a) - mean(b).
    // paired = true resamples trial indices jointly (a and b must then have equal length).
    Interval bootstrap_diff_ci(std::span<const double> a, std::span<const double> b, bool paired,
                               std::size_t resamples, double confidence, Rng &rng);
}
