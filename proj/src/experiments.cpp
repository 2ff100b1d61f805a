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

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace rissim
{
    namespace
    {
        constexpr double deg = std::numbers::pi / 180.0;

        std::vector<double> range_values(double first, double last, double step)
        {
            std::vector<double> v;
            const auto n = std::size_t(std::llround((last - first) / step));
            for (std::size_t i = 0; i <= n; ++i)
                v.push_back(first + double(i) * step);
            return v;
        }

        void write_file(const std::string &path, const std::string &content)
        {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw std::runtime_error("Cannot write '" + path + "'.");
            out << content;
        }

        std::string rx_suffix(std::size_t u, std::size_t n_rx)
        {
            return n_rx > 1 ? "_rx" + std::to_string(u) : "";
        }

        json sweep_json(const SweepSpec &s)
        {
            return json{{"variable", to_string(s.variable)}, {"values", s.values}, {"target_ris_index", s.target_ris_index}};
        }
    }

    std::optional<ClusterSet> fixed_geometry(const ScenarioConfig &cfg, std::uint64_t sweep_index)
    {
        if (cfg.flags.resample_geometry)
            return std::nullopt;
        Rng rng(derive_seed({cfg.master_seed, sweep_index, stream::geometry}));
        return sample_clusters(cfg.env, cfg.tx, cfg.cluster_reference(), cfg.rx.front(), rng);
    }

    TrialOutcome evaluate_trial(const ScenarioConfig &cfg, std::uint64_t sweep_index, std::uint64_t trial,
                                const ClusterSet *geometry)
    {
        const std::uint64_t trial_seed = derive_seed({cfg.master_seed, sweep_index, trial});
        Rng env_rng(derive_seed({trial_seed, stream::environment}));
        const ClusterSet clusters = geometry ? resample_gains(*geometry, env_rng)
                                             : sample_clusters(cfg.env, cfg.tx, cfg.cluster_reference(), cfg.rx.front(), env_rng);

        const LinkParams link = cfg.link_params();
        const double k = wavenumber(link.pl_los.f);
        const std::size_t n_rx = cfg.rx.size();

        TrialOutcome out;
        out.n_scatterers = clusters.n_scatterers();
        std::vector<std::complex<double>> h_siso(n_rx);
        for (std::size_t u = 0; u < n_rx; ++u)
        {
            Rng rng(derive_seed({trial_seed, stream::direct, u}));
            h_siso[u] = direct_channel(clusters, cfg.tx, cfg.rx[u], link, k, rng);
        }
        out.H = h_siso;

        for (std::size_t m = 0; m < cfg.ris_list.size(); ++m)
        {
            const auto &surface = cfg.ris_list[m];
            if (!surface.enabled)
                continue;
            const auto &ris = surface.ris;

            Rng rng_h(derive_seed({trial_seed, stream::tx_ris, m}));
            const cvec h = tx_ris_channel(ris, clusters, cfg.tx, link, rng_h);

            std::vector<cvec> g(n_rx);
            for (std::size_t u = 0; u < n_rx; ++u)
            {
                Rng rng_g(derive_seed({trial_seed, stream::ris_rx, m, u}));
                g[u] = ris_rx_channel(ris, cfg.rx[u], link, rng_g);
            }

            if (n_rx == 1 && !surface.allocation)
            {
                const auto phases = optimal_phases(g[0], h, h_siso[0], ris.alpha, cfg.flags.direct_phase_sign);
                out.H[0] += cascade(g[0], phases, h);
                continue;
            }

            // Each user's block carries that user's co-phasing solution
            const ElementAllocation alloc = surface.allocation ? *surface.allocation : partition_elements(ris.n_elements, n_rx);
            PhaseConfig shared{std::vector<double>(ris.n_elements, 0.0), ris.alpha};
            for (std::size_t u = 0; u < n_rx; ++u)
            {
                const auto own = optimal_phases(g[u], h, h_siso[u], ris.alpha, cfg.flags.direct_phase_sign);
                for (auto e : alloc.assignments[u])
                    shared.phases[e] = own.phases[e];
            }

            for (std::size_t u = 0; u < n_rx; ++u)
            {
                if (cfg.flags.offblock == Offblock::include)
                {
                    out.H[u] += cascade(g[u], shared, h);
                    continue;
                }
                std::complex<double> sum = 0.0;
                for (auto e : alloc.assignments[u])
                    sum += g[u][e] * std::polar(1.0, shared.phases[e]) * h[e];
                out.H[u] += ris.alpha * sum;
            }
        }
        return out;
    }

    std::vector<MetricsResult> run_scenario(const ScenarioConfig &cfg, const RunOptions &opt, std::uint64_t sweep_index)
    {
        validate_or_throw(cfg);

        const auto geometry = fixed_geometry(cfg, sweep_index);
        const ClusterSet *geo = geometry ? &*geometry : nullptr;
        const std::size_t n = cfg.n_trials, n_rx = cfg.rx.size();
        std::vector<std::vector<std::complex<double>>> H(n_rx, std::vector<std::complex<double>>(n));

        const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, unsigned(n)));
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&](unsigned w) {
            try
            {
                for (std::size_t t = w; t < n; t += workers)
                {
                    const auto r = evaluate_trial(cfg, sweep_index, t, geo);
                    for (std::size_t u = 0; u < n_rx; ++u)
                        H[u][t] = r.H[u];
                }
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        };

        if (workers == 1)
            work(0);
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work, w);
        }
        if (error)
            std::rethrow_exception(error);

        std::vector<MetricsResult> results;
        for (std::size_t u = 0; u < n_rx; ++u)
        {
            auto r = ergodic_rate(H[u], cfg.budget, run_seed(cfg, sweep_index), cfg.bootstrap_resamples);
            r.seed = cfg.master_seed;
            results.push_back(std::move(r));
        }
        return results;
    }

    std::string to_string(SweepVariable v)
    {
        switch (v)
        {
        case SweepVariable::RIS_X:
            return "RIS_X";
        case SweepVariable::RIS_Z:
            return "RIS_Z";
        case SweepVariable::TILT_R:
            return "TILT_R";
        case SweepVariable::N_ELEMENTS:
            return "N_ELEMENTS";
        case SweepVariable::PT_DBM:
            return "PT_DBM";
        default:
            return "N_RIS";
        }
    }

    SweepVariable sweep_variable_from_string(const std::string &s)
    {
        for (auto v : {SweepVariable::RIS_X, SweepVariable::RIS_Z, SweepVariable::TILT_R, SweepVariable::N_ELEMENTS,
                       SweepVariable::PT_DBM, SweepVariable::N_RIS})
            if (to_string(v) == s)
                return v;
        throw std::invalid_argument("Unknown sweep variable '" + s + "' (expected RIS_X, RIS_Z, TILT_R, N_ELEMENTS, PT_DBM or N_RIS).");
    }

    std::vector<std::string> validate(const ScenarioConfig &cfg, const SweepSpec &sweep)
    {
        std::vector<std::string> errors;
        if (sweep.values.empty())
            errors.push_back("Sweep needs at least one value.");

        const bool per_surface = sweep.variable == SweepVariable::RIS_X || sweep.variable == SweepVariable::RIS_Z ||
                                 sweep.variable == SweepVariable::TILT_R || sweep.variable == SweepVariable::N_ELEMENTS;
        if (per_surface && sweep.target_ris_index >= cfg.ris_list.size())
            errors.push_back("Sweep variable " + to_string(sweep.variable) + " targets ris_list[" +
                             std::to_string(sweep.target_ris_index) + "] which does not exist.");

        for (double v : sweep.values)
        {
            if (!std::isfinite(v))
            {
                errors.push_back("Sweep values must be finite.");
                break;
            }
            const bool integral = std::floor(v) == v && v >= 0.0;
            if (sweep.variable == SweepVariable::N_ELEMENTS && (!integral || v < 1.0 || !is_perfect_square(std::size_t(v))))
                errors.push_back("N_ELEMENTS value " + format_number(v) + " is not a positive perfect square.");
            if (sweep.variable == SweepVariable::N_RIS && (!integral || v > double(cfg.ris_list.size())))
                errors.push_back("N_RIS value " + format_number(v) + " must be an integer in [0, " +
                                 std::to_string(cfg.ris_list.size()) + "].");
            if (sweep.variable == SweepVariable::TILT_R && std::abs(v) > std::numbers::pi)
                errors.push_back("TILT_R value " + format_number(v) + " is outside [-pi, pi].");
        }
        return errors;
    }

    ScenarioConfig apply_sweep_value(const ScenarioConfig &cfg, const SweepSpec &sweep, double value)
    {
        ScenarioConfig out = cfg;
        auto target = [&]() -> RisDescriptor & { return out.ris_list.at(sweep.target_ris_index).ris; };
        switch (sweep.variable)
        {
        case SweepVariable::RIS_X:
            target().position.x = value;
            break;
        case SweepVariable::RIS_Z:
            target().position.z = value;
            break;
        case SweepVariable::TILT_R:
            target().orient.tilt_R = value;
            break;
        case SweepVariable::N_ELEMENTS:
            target().n_elements = std::size_t(std::llround(value));
            break;
        case SweepVariable::PT_DBM:
            out.budget.pt_dbm = value;
            break;
        case SweepVariable::N_RIS:
        {
            const auto count = std::size_t(std::llround(value));
            for (std::size_t m = 0; m < out.ris_list.size(); ++m)
                out.ris_list[m].enabled = m < count;
            break;
        }
        }
        return out;
    }

    std::vector<SweepPoint> run_sweep(const ScenarioConfig &cfg, const SweepSpec &sweep, const RunOptions &opt)
    {
        auto errors = validate(cfg, sweep);
        if (!errors.empty())
            throw ValidationError(std::move(errors));

        std::vector<SweepPoint> table;
        for (std::size_t i = 0; i < sweep.values.size(); ++i)
            table.push_back({sweep.values[i], run_scenario(apply_sweep_value(cfg, sweep, sweep.values[i]), opt, i)});
        return table;
    }

    std::string sweep_table_csv(const std::vector<SweepPoint> &table, std::size_t rx_index)
    {
        std::ostringstream out;
        out << sweep_csv_header << '\n';
        for (const auto &p : table)
        {
            const auto &r = p.results.at(rx_index);
            out << (std::isnan(p.value) ? std::string() : format_number(p.value)) << ',' << format_number(r.ergodic_rate) << ','
                << format_number(r.mean_snr_db) << ',' << format_number(r.rate_ci_low) << ','
                << format_number(r.rate_ci_high) << ',' << r.n_trials << ',' << r.seed << '\n';
        }
        return out.str();
    }

    std::string sweep_table_json(const std::vector<SweepPoint> &table, std::size_t rx_index)
    {
        // Numbers go through the same 9-digit formatting as the CSV
        auto num = [](double v) { return json::parse(format_number(v)); };
        json rows = json::array();
        for (const auto &p : table)
        {
            const auto &r = p.results.at(rx_index);
            rows.push_back(json{{"sweep_value", std::isnan(p.value) ? json(nullptr) : num(p.value)},
                                {"ergodic_rate_bps_hz", num(r.ergodic_rate)},
                                {"mean_snr_db", num(r.mean_snr_db)},
                                {"rate_ci_low", num(r.rate_ci_low)},
                                {"rate_ci_high", num(r.rate_ci_high)},
                                {"n_trials", r.n_trials},
                                {"seed", r.seed}});
        }
        return rows.dump(2) + "\n";
    }

    std::string cdf_csv(const std::vector<std::pair<double, double>> &cdf)
    {
        std::ostringstream out;
        out << "value,probability\n";
        for (const auto &[v, p] : cdf)
            out << format_number(v) << ',' << format_number(p) << '\n';
        return out.str();
    }

    std::vector<std::string> write_sweep(const std::string &dir, const std::string &name, const ScenarioConfig &cfg,
                                         const std::optional<SweepSpec> &sweep, const std::vector<SweepPoint> &table,
                                         OutputFormat format, const json &extra_meta)
    {
        std::filesystem::create_directories(dir);
        std::vector<std::string> written;
        const std::size_t n_rx = table.empty() ? 0 : table.front().results.size();
        for (std::size_t u = 0; u < n_rx; ++u)
        {
            const auto ext = format == OutputFormat::csv ? ".csv" : ".json";
            const auto path = (std::filesystem::path(dir) / (name + rx_suffix(u, n_rx) + (format == OutputFormat::json ? "_table" : "") + ext)).string();
            write_file(path, format == OutputFormat::csv ? sweep_table_csv(table, u) : sweep_table_json(table, u));
            written.push_back(path);
        }

        json meta;
        meta["name"] = name;
        meta["config"] = to_json(cfg);
        meta["sweep"] = sweep ? sweep_json(*sweep) : json(nullptr);
        meta["receivers"] = n_rx;
        meta["snr_convention"] = "mean_snr_db = 10*log10(E[SNR])";
        meta["confidence"] = 0.95;
        for (auto it = extra_meta.begin(); it != extra_meta.end(); ++it)
            meta[it.key()] = it.value();
        const auto meta_path = (std::filesystem::path(dir) / (name + ".json")).string();
        write_file(meta_path, meta.dump(2) + "\n");
        written.push_back(meta_path);
        return written;
    }

    std::vector<std::string> write_cdfs(const std::string &dir, const std::string &name, const std::vector<MetricsResult> &results)
    {
        std::filesystem::create_directories(dir);
        std::vector<std::string> written;
        for (std::size_t u = 0; u < results.size(); ++u)
        {
            const auto path = (std::filesystem::path(dir) / (name + rx_suffix(u, results.size()) + "_cdf.csv")).string();
            write_file(path, cdf_csv(empirical_cdf(results[u].rate_samples)));
            written.push_back(path);
        }
        return written;
    }

    ScenarioConfig apply_overrides(const ScenarioConfig &cfg, const std::vector<std::pair<std::string, std::string>> &overrides)
    {
        if (overrides.empty())
            return cfg;
        json j = to_json(cfg);
        for (const auto &[path, value] : overrides)
            if (!apply_override(j, path, value))
                throw std::invalid_argument("Override path '" + path + "' does not exist in the scenario configuration.");
        return scenario_from_json(j);
    }

    std::vector<FigurePanel> figure_panels(const std::string &id)
    {
        const Point3 tx{0.0, 20.0, 2.0};
        const Point3 rx{75.0, 35.0, 1.0};

        auto base = [&](std::vector<ScenarioRis> surfaces, double pt_dbm = 30.0) {
            ScenarioConfig c;
            c.tx = tx;
            c.rx = {rx};
            c.ris_list = std::move(surfaces);
            c.budget = {pt_dbm, -100.0};
            return c;
        };
        auto disabled = [](ScenarioRis s) {
            s.enabled = false;
            return s;
        };
        auto pt_sweep = [](std::vector<double> v) { return SweepSpec{SweepVariable::PT_DBM, std::move(v), 0}; };

        const auto pt_axis = range_values(10.0, 40.0, 5.0);
        std::vector<FigurePanel> panels;

        if (id == "F2")
        {
            // Single, multiple and RIS-free environments versus transmit power, plus rate CDFs at 30 dBm
            const auto r1 = make_ris({75.0, 30.0, 2.0}), r2 = make_ris({74.0, 30.0, 2.0}), r3 = make_ris({71.0, 30.0, 2.0});
            panels.push_back({"F2_ris_free", base({disabled(r1)}), pt_sweep(pt_axis), 30.0});
            panels.push_back({"F2_1ris", base({r1}), pt_sweep(pt_axis), 30.0});
            panels.push_back({"F2_2ris", base({r1, r2}), pt_sweep(pt_axis), 30.0});
            panels.push_back({"F2_3ris", base({r1, r2, r3}), pt_sweep(pt_axis), 30.0});
        }
        else if (id == "F3")
        {
            panels.push_back({"F3a_z", base({make_ris({75.0, 34.0, 2.0})}),
                              SweepSpec{SweepVariable::RIS_Z, range_values(0.5, 4.0, 0.5), 0}, std::nullopt});
            panels.push_back({"F3b_x", base({make_ris({75.0, 30.0, 2.0})}),
                              SweepSpec{SweepVariable::RIS_X, range_values(20.0, 75.0, 5.0), 0}, std::nullopt});
        }
        else if (id == "F4")
        {
            for (double z : {2.0, 3.0, 4.0})
                panels.push_back({"F4_z" + format_number(z), base({make_ris({75.0, 30.0, z})}), pt_sweep(range_values(0.0, 40.0, 5.0)), std::nullopt});
        }
        else if (id == "F5")
        {
            // Tilt towards the receiver at 15 dBm
            const auto tilt = range_values(0.0, -80.0 * deg, -10.0 * deg);
            auto a = base({make_ris({70.0, 30.0, 2.0})}, 15.0);
            a.rx = {{70.0, 35.0, 1.0}};
            a.ris_list[0].ris.orient = {Plane::XZ, Axis::X, 0.0};
            auto b = base({make_ris({75.0, 35.0, 2.0})}, 15.0);
            b.rx = {{70.0, 35.0, 1.0}};
            b.ris_list[0].ris.orient = {Plane::YZ, Axis::Y, 0.0};
            panels.push_back({"F5a_xz_tilt_x", a, SweepSpec{SweepVariable::TILT_R, tilt, 0}, std::nullopt});
            panels.push_back({"F5b_yz_tilt_y", b, SweepSpec{SweepVariable::TILT_R, tilt, 0}, std::nullopt});
        }
        else if (id == "F6")
        {
            const auto r = make_ris({75.0, 30.0, 2.0});
            panels.push_back({"F6_ris_free", base({disabled(r)}), pt_sweep(pt_axis), std::nullopt});
            panels.push_back({"F6_n64", base({make_ris({75.0, 30.0, 2.0}, 64)}), pt_sweep(pt_axis), std::nullopt});
            panels.push_back({"F6_n256", base({r}), pt_sweep(pt_axis), std::nullopt});
        }
        else if (id == "F7")
        {
            // Surface 0 moves along [x, 34, z], surface 1 stays at [75, 30, 2]
            panels.push_back({"F7a_x", base({make_ris({75.0, 34.0, 2.0}), make_ris({75.0, 30.0, 2.0})}),
                              SweepSpec{SweepVariable::RIS_X, range_values(25.0, 75.0, 5.0), 0}, std::nullopt});
            panels.push_back({"F7b_z", base({make_ris({75.0, 34.0, 2.0}), make_ris({75.0, 30.0, 2.0})}),
                              SweepSpec{SweepVariable::RIS_Z, range_values(1.0, 3.0, 0.5), 0}, std::nullopt});
        }
        else if (id == "F8")
        {
            for (std::size_t n : {256u, 64u})
            {
                const std::string tag = n == 256 ? "F8a_n256" : "F8b_n64";
                const auto r1 = make_ris({75.0, 30.0, 2.0}, n), r2 = make_ris({74.0, 30.0, 2.0}, n);
                panels.push_back({tag + "_ris_free", base({disabled(r1), disabled(r2)}), pt_sweep(pt_axis), std::nullopt});
                panels.push_back({tag + "_1ris", base({r1, disabled(r2)}), pt_sweep(pt_axis), std::nullopt});
                panels.push_back({tag + "_2ris", base({r1, r2}), pt_sweep(pt_axis), std::nullopt});
            }
        }
        else if (id == "F9")
        {
            // Two users sharing a 256-element surface, 128 elements each
            auto c = base({make_ris({20.0, 30.0, 2.0}, 256)});
            c.rx = {{70.0, 32.0, 1.0}, {70.0, 35.0, 1.0}};
            c.ris_list[0].allocation = partition_elements(256, 2);
            auto free = c;
            free.ris_list[0].enabled = false;
            const SweepSpec xs{SweepVariable::RIS_X, range_values(20.0, 70.0, 5.0), 0};
            panels.push_back({"F9_two_users", c, xs, std::nullopt});
            panels.push_back({"F9_ris_free", free, xs, std::nullopt});
        }
        else
            throw std::invalid_argument("Unknown figure id '" + id + "' (expected F2 ... F9).");
        return panels;
    }

    std::vector<std::string> reproduce_figure(const std::string &id, const FigureOptions &opt)
    {
        auto panels = figure_panels(id);

        // An override must apply to at least one panel
        std::vector<bool> used(opt.overrides.size(), false);
        for (auto &panel : panels)
        {
            json j = to_json(panel.cfg);
            for (std::size_t i = 0; i < opt.overrides.size(); ++i)
                if (apply_override(j, opt.overrides[i].first, opt.overrides[i].second))
                    used[i] = true;
            panel.cfg = scenario_from_json(j);
            if (opt.n_trials)
                panel.cfg.n_trials = *opt.n_trials;
            if (opt.seed)
                panel.cfg.master_seed = *opt.seed;
        }
        for (std::size_t i = 0; i < used.size(); ++i)
            if (!used[i])
                throw std::invalid_argument("Override path '" + opt.overrides[i].first + "' does not exist in figure " + id + ".");

        std::vector<std::string> written;
        for (const auto &panel : panels)
        {
            const auto table = run_sweep(panel.cfg, panel.sweep, opt.run);
            const json extra{{"figure", id}};
            auto files = write_sweep(opt.out_dir, panel.name, panel.cfg, panel.sweep, table, opt.format, extra);
            written.insert(written.end(), files.begin(), files.end());
            if (panel.cdf_at)
                for (const auto &p : table)
                    if (std::abs(p.value - *panel.cdf_at) < 1e-9)
                    {
                        auto cdfs = write_cdfs(opt.out_dir, panel.name, p.results);
                        written.insert(written.end(), cdfs.begin(), cdfs.end());
                    }
        }
        return written;
    }
}
