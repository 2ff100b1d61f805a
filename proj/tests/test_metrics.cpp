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

#include "doctest.h"

#include "rissim/metrics.hpp"
#include "rissim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace rissim;

namespace
{
    using cd = std::complex<double>;
}

TEST_CASE("effective_channel")
{
    CHECK(effective_channel({}, cd(0.3, -0.2)) == cd(0.3, -0.2));

    const std::vector<cd> g1{cd(1, 2), cd(0.5, -1)}, h1{cd(-1, 1), cd(2, 0.25)};
    const std::vector<cd> g2{cd(0.1, 0.2), cd(3, 1)}, h2{cd(1, 0), cd(0, 1)};
    const PhaseConfig p1{{0.4, -2.0}, 0.9}, p2{{1.0, 0.0}, 1.0};
    const cd d(0.01, 0.02);

    const RisLink both[2] = {{g1, &p1, h1}, {g2, &p2, h2}};
    const RisLink first[1] = {{g1, &p1, h1}};
    const RisLink second[1] = {{g2, &p2, h2}};
    const cd H2 = effective_channel(both, d);
    CHECK(std::abs(H2 - (cascade(g1, p1, h1) + cascade(g2, p2, h2) + d)) <= 1e-12);
    // Additivity of the surface terms
    CHECK(std::abs((H2 - effective_channel(second, d)) - (effective_channel(first, d) - d)) <= 1e-12);
}

TEST_CASE("snr and rate")
{
    const LinkBudget b{30.0, -100.0};
    CHECK(snr(cd(0.0, 0.0), b) == 0.0);
    CHECK(snr(cd(1e-5, 0.0), b) == doctest::Approx(1000.0).epsilon(1e-12));
    const LinkBudget hot{40.0, -100.0};
    CHECK(snr(cd(3e-6, 2e-6), hot) == doctest::Approx(10.0 * snr(cd(3e-6, 2e-6), b)).epsilon(1e-12));
    CHECK(rate_from_snr(1000.0) == doctest::Approx(std::log2(1001.0)));
    CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0));
    CHECK(watt_to_dbm(0.001) == doctest::Approx(0.0));
}

TEST_CASE("ergodic_rate")
{
    const LinkBudget b{30.0, -100.0};
    const std::vector<cd> zeros(50, cd(0.0, 0.0));
    const auto z = ergodic_rate(zeros, b, 1, 200);
    CHECK(z.ergodic_rate == 0.0);
    CHECK(z.rate_ci_low == 0.0);
    CHECK(z.rate_ci_high == 0.0);
    CHECK(z.n_trials == 50);
    CHECK(z.mean_of_snr_db == doctest::Approx(-300.0));

    const std::vector<cd> constant(100, std::polar(1e-5, 0.4));
    const auto c = ergodic_rate(constant, b, 1, 200);
    CHECK(c.ergodic_rate == doctest::Approx(9.967).epsilon(1e-4));
    CHECK(c.mean_snr_db == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(c.rate_samples.size() == 100);

    // Rate is the mean of log2(1 + SNR), not log2 of the mean
    const std::vector<cd> mixed{cd(1e-5, 0.0), cd(0.0, 0.0)};
    const auto m = ergodic_rate(mixed, b, 1, 200);
    CHECK(m.ergodic_rate == doctest::Approx(std::log2(1001.0) / 2.0));
    CHECK(m.mean_snr_db == doctest::Approx(10.0 * std::log10(500.0)));
    CHECK(m.rate_ci_low <= m.ergodic_rate);
    CHECK(m.rate_ci_high >= m.ergodic_rate);

    // Same inputs and seed: bit identical
    const auto m2 = ergodic_rate(mixed, b, 1, 200);
    CHECK(m2.rate_ci_low == m.rate_ci_low);
    CHECK(m2.rate_ci_high == m.rate_ci_high);
}

TEST_CASE("empirical_cdf")
{
    const std::vector<double> one{4.5};
    const auto c1 = empirical_cdf(one);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == std::pair<double, double>{4.5, 1.0});

    const std::vector<double> four{3.0, 1.0, 4.0, 2.0};
    const auto c4 = empirical_cdf(four);
    REQUIRE(c4.size() == 4);
    CHECK(c4[1].first == 2.0);
    CHECK(c4[1].second == 0.5);
    CHECK(c4[3].second == 1.0);

    CHECK_THROWS_AS(empirical_cdf(std::vector<double>{}), std::invalid_argument);

    Rng rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> s(100000);
    for (auto &x : s)
        x = u(rng);
    const auto cdf = empirical_cdf(s);
    double ks = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i)
    {
        const double lo = double(i) / double(cdf.size());
        ks = std::max({ks, std::abs(cdf[i].second - cdf[i].first), std::abs(cdf[i].first - lo)});
    }
    CHECK(ks < 0.01);
}

TEST_CASE("received_power_approx")
{
    const double lambda = wavelength(73e9);
    const double friis = std::pow(lambda / (4.0 * std::numbers::pi * 50.0), 2.0);
    CHECK(received_power_approx(0.0, 1.0, 50.0, lambda) == doctest::Approx(friis));
    CHECK(received_power_approx(255.0, 1.0, 50.0, lambda) / received_power_approx(63.0, 1.0, 50.0, lambda) ==
          doctest::Approx(16.0).epsilon(1e-14));
    CHECK(std::abs(received_power_approx(255.0, 1.0, 50.0, lambda) - 2.80e-6) <= 0.01e-6);
}

TEST_CASE("pairwise_sum")
{
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(mean(std::vector<double>{1.0, 2.0, 6.0}) == 3.0);
}

TEST_CASE("bootstrap intervals")
{
    Rng data(1);
    std::normal_distribution<double> nd(1.0, 2.0);
    std::vector<double> a(4000), b(4000);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        const double common = nd(data);
        a[i] = common + 0.5;
        b[i] = common + 0.02 * nd(data);
    }
    Rng r1(5);
    const auto ci = bootstrap_mean_ci(a, 1000, 0.95, r1);
    CHECK(ci.low < ci.estimate);
    CHECK(ci.high > ci.estimate);
    // Standard error 2 / sqrt(4000) ~ 0.032; half width ~ 0.062
    CHECK((ci.high - ci.low) / 2.0 == doctest::Approx(1.96 * 2.0 / std::sqrt(4000.0)).epsilon(0.15));

    Rng r2(5), r3(5);
    const auto paired = bootstrap_diff_ci(a, b, true, 1000, 0.95, r2);
    const auto unpaired = bootstrap_diff_ci(a, b, false, 1000, 0.95, r3);
    CHECK(paired.estimate == doctest::Approx(unpaired.estimate));
    CHECK(paired.low > 0.0);
    // Pairing removes the common component
    CHECK(paired.high - paired.low < 0.25 * (unpaired.high - unpaired.low));

    const std::vector<double> shorter(10, 0.0);
    Rng r4(1);
    CHECK_THROWS_AS(bootstrap_diff_ci(a, shorter, true, 100, 0.95, r4), std::invalid_argument);
}
