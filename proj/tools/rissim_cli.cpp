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

#include "rissim/experiments.hpp"
#include "rissim/io.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>

namespace
{
    struct Common
    {
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;
        std::string out = ".";
        std::string format = "csv";
        unsigned threads = 1;
    };

    void add_common(CLI::App *app, Common &c)
    {
        app->add_option("--seed", c.seed, "Master seed (overrides the config)");
        app->add_option("--trials", c.trials, "Monte Carlo trials (overrides the config)")->check(CLI::PositiveNumber);
        app->add_option("--out", c.out, "Output directory");
        app->add_option("--format", c.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
        app->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    }

    rissim::ScenarioConfig load(const std::string &path, const Common &c)
    {
        auto cfg = rissim::load_scenario(path);
        if (c.seed)
            cfg.master_seed = *c.seed;
        if (c.trials)
            cfg.n_trials = *c.trials;
        return cfg;
    }

    rissim::OutputFormat format_of(const Common &c)
    {
        return c.format == "json" ? rissim::OutputFormat::json : rissim::OutputFormat::csv;
    }

    std::string stem(const std::string &path) { return std::filesystem::path(path).stem().string(); }

    void print_written(const std::vector<std::string> &files)
    {
        for (const auto &f : files)
            std::cout << "wrote " << f << '\n';
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"rissim: Monte Carlo simulator for RIS-assisted radio environments"};
    app.require_subcommand(1);

    Common sim_opt, sweep_opt, fig_opt;

    std::string sim_config;
    auto *simulate = app.add_subcommand("simulate", "Run one scenario and write its metrics and rate CDF");
    simulate->add_option("config", sim_config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    add_common(simulate, sim_opt);

    std::string sweep_config, sweep_var;
    std::vector<double> sweep_values;
    std::size_t sweep_target = 0;
    auto *sweep = app.add_subcommand("sweep", "Sweep one scenario variable");
    sweep->add_option("config", sweep_config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--var", sweep_var, "RIS_X, RIS_Z, TILT_R (rad), N_ELEMENTS, PT_DBM or N_RIS")->required();
    sweep->add_option("--values", sweep_values, "Comma separated values")->required()->delimiter(',');
    sweep->add_option("--target", sweep_target, "Index of the swept surface in ris_list");
    add_common(sweep, sweep_opt);

    std::string fig_id;
    std::vector<std::string> fig_overrides;
    auto *figure = app.add_subcommand("figure", "Run a canned figure scenario (F2 ... F9)");
    figure->add_option("id", fig_id, "Figure id")->required()->check(CLI::IsMember({"F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9"}));
    figure->add_option("--override", fig_overrides, "Config override key=value (dot separated path)");
    add_common(figure, fig_opt);

    std::string val_config;
    auto *validate = app.add_subcommand("validate", "Check a scenario file and list every violation");
    validate->add_option("config", val_config, "Scenario JSON file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*simulate)
        {
            const auto cfg = load(sim_config, sim_opt);
            const auto results = rissim::run_scenario(cfg, {sim_opt.threads});
            const std::vector<rissim::SweepPoint> table{{std::numeric_limits<double>::quiet_NaN(), results}};
            const auto name = stem(sim_config);
            auto files = rissim::write_sweep(sim_opt.out, name, cfg, std::nullopt, table, format_of(sim_opt));
            auto cdfs = rissim::write_cdfs(sim_opt.out, name, results);
            files.insert(files.end(), cdfs.begin(), cdfs.end());
            for (std::size_t u = 0; u < results.size(); ++u)
                std::cout << "rx" << u << ": ergodic rate " << rissim::format_number(results[u].ergodic_rate)
                          << " b/s/Hz, mean SNR " << rissim::format_number(results[u].mean_snr_db) << " dB\n";
            print_written(files);
        }
        else if (*sweep)
        {
            const auto cfg = load(sweep_config, sweep_opt);
            const rissim::SweepSpec spec{rissim::sweep_variable_from_string(sweep_var), sweep_values, sweep_target};
            const auto table = rissim::run_sweep(cfg, spec, {sweep_opt.threads});
            print_written(rissim::write_sweep(sweep_opt.out, stem(sweep_config) + "_" + sweep_var, cfg, spec, table,
                                              format_of(sweep_opt)));
        }
        else if (*figure)
        {
            rissim::FigureOptions opt;
            for (const auto &o : fig_overrides)
            {
                const auto eq = o.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw std::invalid_argument("Override '" + o + "' must look like key=value.");
                opt.overrides.emplace_back(o.substr(0, eq), o.substr(eq + 1));
            }
            opt.n_trials = fig_opt.trials;
            opt.seed = fig_opt.seed;
            opt.out_dir = fig_opt.out;
            opt.format = format_of(fig_opt);
            opt.run.threads = fig_opt.threads;
            print_written(rissim::reproduce_figure(fig_id, opt));
        }
        else if (*validate)
        {
            const auto cfg = rissim::load_scenario(val_config);
            const auto errors = rissim::validate(cfg);
            if (!errors.empty())
            {
                for (const auto &e : errors)
                    std::cerr << "error: " << e << '\n';
                return 1;
            }
            std::cout << "OK: " << val_config << '\n';
        }
    }
    catch (const rissim::ValidationError &e)
    {
        for (const auto &msg : e.errors())
            std::cerr << "error: " << msg << '\n';
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
