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

#include "rissim/propagation.hpp"

#include <cmath>

namespace rissim
{
    std::string to_string(LosMode m)
    {
        switch (m)
        {
        case LosMode::ALWAYS:
            return "ALWAYS";
        case LosMode::NEVER:
            return "NEVER";
        default:
            return "PROBABILISTIC";
        }
    }

    LosMode los_mode_from_string(const std::string &s)
    {
        if (s == "ALWAYS")
            return LosMode::ALWAYS;
        if (s == "NEVER")
            return LosMode::NEVER;
        if (s == "PROBABILISTIC")
            return LosMode::PROBABILISTIC;
        throw std::invalid_argument("Unknown LOS mode '" + s + "' (expected ALWAYS, NEVER or PROBABILISTIC).");
    }

    double pathloss_db(const PathlossParams &params, double d, double shadow_x)
    {
        if (!(d > 0.0))
            throw std::domain_error("Pathloss distance must be positive.");

        const double lambda = wavelength(params.f);
        const double exponent = params.n * (1.0 + params.b * (params.f - params.f0) / params.f0);
        return -20.0 * std::log10(4.0 * std::numbers::pi / lambda) - 10.0 * exponent * std::log10(d) - shadow_x;
    }

    double sample_shadow(double sigma, Rng &rng)
    {
        const double z = std::normal_distribution<double>(0.0, 1.0)(rng);
        return sigma > 0.0 ? sigma * z : 0.0;
    }

    double los_probability(const LosModel &model, double d, double ris_z, double tx_z)
    {
        switch (model.mode)
        {
        case LosMode::ALWAYS:
            return 1.0;
        case LosMode::NEVER:
            return 0.0;
        default:
            if (model.force_if_above_tx && ris_z >= tx_z)
                return 1.0;
            return std::exp(-d / model.decay_eta);
        }
    }

    int los_indicator(const LosModel &model, double d, double ris_z, double tx_z, Rng &rng)
    {
        // Always consume one draw so downstream samples stay aligned across configurations
        const double p = los_probability(model, d, ris_z, tx_z);
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        return u < p ? 1 : 0;
    }

    double element_gain(double theta, double q)
    {
        const double half_pi = 0.5 * std::numbers::pi;
        if (!(std::abs(theta) < half_pi))
            return 0.0;
        return 2.0 * (2.0 * q + 1.0) * std::pow(std::cos(theta), 2.0 * q);
    }
}
