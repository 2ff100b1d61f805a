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

#include <numbers>
#include <stdexcept>
#include <string>

namespace rissim
{
    inline constexpr double speed_of_light = 299792458.0; // [m/s]

    inline double wavelength(double f_hz) { return speed_of_light / f_hz; }
    inline double wavenumber(double f_hz) { return 2.0 * std::numbers::pi / wavelength(f_hz); }

    // Power dB -> linear power and amplitude
    inline double db_to_power(double db) { return std::pow(10.0, db / 10.0); }
    inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }

    // Parameters of the close-in free space reference pathloss model with
    // frequency-dependent exponent
    struct PathlossParams
    {
        double n = 1.73;     // Pathloss exponent
        double b = 0.0;      // Frequency dependence of the exponent
        double sigma = 3.02; // Shadow fading std-dev [dB]
        double f = 73e9;     // Operating frequency [Hz]
        double f0 = 73e9;    // Reference frequency [Hz]

        static PathlossParams los_73ghz() { return {1.73, 0.0, 3.02, 73e9, 73e9}; }
        static PathlossParams nlos_73ghz() { return {3.19, 0.06, 8.29, 73e9, 73e9}; }
    };

    enum class LosMode
    {
        ALWAYS,
        NEVER,
        PROBABILISTIC
    };

    struct LosModel
    {
        LosMode mode = LosMode::PROBABILISTIC;
        double decay_eta = 30.0;      // [m], p = exp(-d / decay_eta)
        bool force_if_above_tx = true; // p = 1 when the surface is at or above the Tx height
    };

    std::string to_string(LosMode m);
    LosMode los_mode_from_string(const std::string &s);

    // Pathloss as a gain in dB (negative for attenuation) at distance d [m], including the shadow term.
    // Throws std::domain_error for d <= 0.
    double pathloss_db(const PathlossParams &params, double d, double shadow_x = 0.0);

    // Zero-mean Gaussian shadow factor with std-dev sigma [dB]
    double sample_shadow(double sigma, Rng &rng);

    // LOS probability of a link of length d
    double los_probability(const LosModel &model, double d, double ris_z, double tx_z);

    // Bernoulli draw of the LOS indicator
    int los_indicator(const LosModel &model, double d, double ris_z, double tx_z, Rng &rng);

    // Cosine-power element pattern, 2(2q+1) cos^(2q)(theta), zero outside |theta| < pi/2
    double element_gain(double theta, double q);
}
