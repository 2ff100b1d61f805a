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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rissim
{
    // Every stochastic operation draws from a caller-owned engine
    using Rng = std::mt19937_64;

    // SplitMix64 finalizer
    constexpr std::uint64_t mix64(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Stateless counter-based derivation: the same key tuple always yields the same seed,
    // independent of evaluation order or worker count.
    constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> keys)
    {
        std::uint64_t h = 0x243f6a8885a308d3ULL;
        for (auto k : keys)
            h = mix64(h ^ mix64(k));
        return h;
    }

    inline Rng make_rng(std::initializer_list<std::uint64_t> keys) { return Rng(derive_seed(keys)); }

    // Sub-stream tags used inside one Monte Carlo trial
    namespace stream
    {
        inline constexpr std::uint64_t environment = 1;
        inline constexpr std::uint64_t direct = 2;
        inline constexpr std::uint64_t tx_ris = 3;
        inline constexpr std::uint64_t ris_rx = 4;
        inline constexpr std::uint64_t geometry = 5;
        inline constexpr std::uint64_t bootstrap = 6;
    }
}
