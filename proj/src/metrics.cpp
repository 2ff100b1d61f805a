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

#include "rissim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rissim
{
    namespace
    {
        double percentile(std::vector<double> &v, double p)
        {
            // Linear interpolation between order statistics
            std::sort(v.begin(), v.end());
            const double pos = p * double(v.size() - 1);
            const auto lo = std::size_t(std::floor(pos));
            const auto hi = std::min(lo + 1, v.size() - 1);
            const double w = pos - double(lo);
            return v[lo] * (1.0 - w) + v[hi] * w;
        }
    }

    double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

    std::complex<double> effective_channel(std::span<const RisLink> links, std::complex<double> h_txrx)
    {
        std::complex<double> H = h_txrx;
        for (const auto &l : links)
            H += cascade(l.g, *l.phases, l.h);
        return H;
    }

    double snr(std::complex<double> H, const LinkBudget &budget)
    {
        return std::pow(10.0, budget.pt_dbm / 10.0) * std::norm(H) / std::pow(10.0, budget.n0_dbm / 10.0);
    }

    double rate_from_snr(double snr_linear) { return std::log2(1.0 + snr_linear); }

    double pairwise_sum(std::span<const double> v)
    {
        if (v.size() <= 8)
        {
            double s = 0.0;
            for (double x : v)
                s += x;
            return s;
        }
        const std::size_t half = v.size() / 2;
        return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
    }

    MetricsResult ergodic_rate(std::span<const std::complex<double>> H, const LinkBudget &budget, std::uint64_t seed,
                               std::size_t bootstrap_resamples, double confidence)
    {
        MetricsResult r;
        r.n_trials = H.size();
        r.seed = seed;
        r.rate_samples.reserve(H.size());
        r.snr_samples.reserve(H.size());

        std::vector<double> snr_db;
        snr_db.reserve(H.size());
        for (auto h : H)
        {
            const double s = snr(h, budget);
            r.snr_samples.push_back(s);
            r.rate_samples.push_back(rate_from_snr(s));
            snr_db.push_back(10.0 * std::log10(std::max(s, 1e-30)));
        }
        if (H.empty())
            return r;

        r.ergodic_rate = mean(r.rate_samples);
        r.mean_snr_db = 10.0 * std::log10(std::max(mean(r.snr_samples), 1e-30));
        r.mean_of_snr_db = mean(snr_db);

        if (bootstrap_resamples > 0)
        {
            Rng rng(derive_seed({seed, stream::bootstrap}));
            const auto ci = bootstrap_mean_ci(r.rate_samples, bootstrap_resamples, confidence, rng);
            r.rate_ci_low = ci.low;
            r.rate_ci_high = ci.high;
        }
        else
            r.rate_ci_low = r.rate_ci_high = r.ergodic_rate;
        return r;
    }

    std::vector<std::pair<double, double>> empirical_cdf(std::span<const double> samples)
    {
        if (samples.empty())
            throw std::invalid_argument("empirical_cdf: no samples.");

        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::pair<double, double>> out;
        out.reserve(sorted.size());
        const double n = double(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            out.emplace_back(sorted[i], double(i + 1) / n);
        return out;
    }

    double received_power_approx(double n_elements, double pt, double d, double lambda)
    {
        const double a = lambda / (4.0 * std::numbers::pi * d);
        return (n_elements + 1.0) * (n_elements + 1.0) * pt * a * a;
    }

    Interval bootstrap_mean_ci(std::span<const double> samples, std::size_t resamples, double confidence, Rng &rng)
    {
        if (samples.empty())
            throw std::invalid_argument("bootstrap_mean_ci: no samples.");

        Interval out;
        out.estimate = mean(samples);
        std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
        std::vector<double> means(resamples), draw(samples.size());
        for (auto &m : means)
        {
            for (auto &d : draw)
                d = samples[pick(rng)];
            m = mean(draw);
        }
        const double tail = 0.5 * (1.0 - confidence);
        out.low = percentile(means, tail);
        out.high = percentile(means, 1.0 - tail);
        return out;
    }

    Interval bootstrap_diff_ci(std::span<const double> a, std::span<const double> b, bool paired,
                               std::size_t resamples, double confidence, Rng &rng)
    {
        if (a.empty() || b.empty())
            throw std::invalid_argument("bootstrap_diff_ci: no samples.");
        if (paired && a.size() != b.size())
            throw std::invalid_argument("bootstrap_diff_ci: paired samples must have equal length.");

        Interval out;
        out.estimate = mean(a) - mean(b);
        std::vector<double> diffs(resamples);

        if (paired)
        {
            std::vector<double> d(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                d[i] = a[i] - b[i];
            std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
            std::vector<double> draw(d.size());
            for (auto &x : diffs)
            {
                for (auto &v : draw)
                    v = d[pick(rng)];
                x = mean(draw);
            }
        }
        else
        {
            std::uniform_int_distribution<std::size_t> pick_a(0, a.size() - 1), pick_b(0, b.size() - 1);
            std::vector<double> da(a.size()), db(b.size());
            for (auto &x : diffs)
            {
                for (auto &v : da)
                    v = a[pick_a(rng)];
                for (auto &v : db)
                    v = b[pick_b(rng)];
                x = mean(da) - mean(db);
            }
        }
        const double tail = 0.5 * (1.0 - confidence);
        out.low = percentile(diffs, tail);
        out.high = percentile(diffs, 1.0 - tail);
        return out;
    }
}
