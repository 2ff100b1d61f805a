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

#include "rissim/io.hpp"
#include "rissim/metrics.hpp"
#include "rissim/scenario.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rissim
{
    // Per-trial end-to-end channel of every receiver
    struct TrialOutcome
    {
        std::vector<std::complex<double>> H; // one entry per receiver
        std::size_t n_scatterers = 0;
    };

    // Cluster geometry held fixed across trials when flags.resample_geometry is false
    std::optional<ClusterSet> fixed_geometry(const ScenarioConfig &cfg, std::uint64_t sweep_index);

    // One Monte Carlo trial. Every random draw comes from streams derived from
    // (master_seed, sweep_index, trial), so trials can be evaluated in any order.
    TrialOutcome evaluate_trial(const ScenarioConfig &cfg, std::uint64_t sweep_index, std::uint64_t trial,
                                const ClusterSet *geometry = nullptr);

    struct RunOptions
    {
        unsigned threads = 1;
    };

    // Seed of the bootstrap stream of one run
    inline std::uint64_t run_seed(const ScenarioConfig &cfg, std::uint64_t sweep_index)
    {
        return derive_seed({cfg.master_seed, sweep_index});
    }

    // Monte Carlo over cfg.n_trials; one MetricsResult per receiver.
    // Throws ValidationError for invalid configurations.
    std::vector<MetricsResult> run_scenario(const ScenarioConfig &cfg, const RunOptions &opt = {},
                                            std::uint64_t sweep_index = 0);

    enum class SweepVariable
    {
        RIS_X,
        RIS_Z,
        TILT_R, // [rad]
        N_ELEMENTS,
        PT_DBM,
        N_RIS // number of enabled surfaces, counted from the front of ris_list
    };

    std::string to_string(SweepVariable v);
    SweepVariable sweep_variable_from_string(const std::string &s);

    struct SweepSpec
    {
        SweepVariable variable = SweepVariable::PT_DBM;
        std::vector<double> values;
        std::size_t target_ris_index = 0;
    };

    struct SweepPoint
    {
        double value = 0.0;
        std::vector<MetricsResult> results; // per receiver
    };

    // Copy of cfg with the sweep variable set to "value"
    ScenarioConfig apply_sweep_value(const ScenarioConfig &cfg, const SweepSpec &sweep, double value);

    std::vector<std::string> validate(const ScenarioConfig &cfg, const SweepSpec &sweep);

    // One run_scenario per value; value i uses sweep index i (value 0 reproduces run_scenario)
    std::vector<SweepPoint> run_sweep(const ScenarioConfig &cfg, const SweepSpec &sweep, const RunOptions &opt = {});

    // ---- Output ----

    enum class OutputFormat
    {
        csv,
        json
    };

    inline constexpr const char *sweep_csv_header =
        "sweep_value,ergodic_rate_bps_hz,mean_snr_db,rate_ci_low,rate_ci_high,n_trials,seed";

    std::string sweep_table_csv(const std::vector<SweepPoint> &table, std::size_t rx_index);
    std::string sweep_table_json(const std::vector<SweepPoint> &table, std::size_t rx_index);
    std::string cdf_csv(const std::vector<std::pair<double, double>> &cdf);

    // Writes <dir>/<name>.csv (or _rx<u> per receiver when there are several) plus the
    // <name>.json metadata sidecar. Returns the paths written.
    std::vector<std::string> write_sweep(const std::string &dir, const std::string &name, const ScenarioConfig &cfg,
                                         const std::optional<SweepSpec> &sweep, const std::vector<SweepPoint> &table,
                                         OutputFormat format, const json &extra_meta = json::object());

    // Writes <dir>/<name>_cdf.csv (or _rx<u>_cdf.csv) of the rate samples
    std::vector<std::string> write_cdfs(const std::string &dir, const std::string &name, const std::vector<MetricsResult> &results);

    // ---- Canned figure scenarios ----

    struct FigurePanel
    {
        std::string name;
        ScenarioConfig cfg;
        SweepSpec sweep;
        std::optional<double> cdf_at; // also write rate CDFs at this sweep value
    };

    // Figure ids F2 ... F9; throws std::invalid_argument for an unknown id
    std::vector<FigurePanel> figure_panels(const std::string &id);

    struct FigureOptions
    {
        std::vector<std::pair<std::string, std::string>> overrides; // config path -> value
        std::optional<std::size_t> n_trials;
        std::optional<std::uint64_t> seed;
        std::string out_dir = ".";
        OutputFormat format = OutputFormat::csv;
        RunOptions run;
    };

    // Runs every panel of a figure and writes its tables; returns the files written
    std::vector<std::string> reproduce_figure(const std::string &id, const FigureOptions &opt);

    // Applies "path=value" overrides through the JSON form of the config.
    // Throws std::invalid_argument when a path does not exist.
    ScenarioConfig apply_overrides(const ScenarioConfig &cfg, const std::vector<std::pair<std::string, std::string>> &overrides);
}
