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

#include "rissim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace rissim
{
    namespace
    {
        [[noreturn]] void fail(const std::string &path, const std::string &msg)
        {
            throw std::invalid_argument("Config error at '" + path + "': " + msg);
        }

        // Strict object reader: every key must be consumed exactly once
        class ObjectReader
        {
        public:
            ObjectReader(const json &j, std::string path) : j_(j), path_(std::move(path))
            {
                if (!j_.is_object())
                    fail(path_, "expected an object");
            }

            bool has(const std::string &key) const { return j_.contains(key) && !j_.at(key).is_null(); }

            // Accepts a key (present, null or absent) without reading it
            void skip(const std::string &key) { seen_.insert(key); }

            const json &at(const std::string &key)
            {
                seen_.insert(key);
                return j_.at(key);
            }

            std::string child(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

            double number(const std::string &key, double fallback)
            {
                seen_.insert(key);
                if (!has(key))
                    return fallback;
                const auto &v = j_.at(key);
                if (!v.is_number())
                    fail(child(key), "expected a number");
                return v.get<double>();
            }

            template <typename T>
            T integer(const std::string &key, T fallback)
            {
                seen_.insert(key);
                if (!has(key))
                    return fallback;
                const auto &v = j_.at(key);
                if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0))
                    return v.get<T>();
                if (v.is_number_float() && v.get<double>() >= 0.0 && std::floor(v.get<double>()) == v.get<double>())
                    return T(v.get<double>());
                fail(child(key), "expected a non-negative integer");
            }

            bool boolean(const std::string &key, bool fallback)
            {
                seen_.insert(key);
                if (!has(key))
                    return fallback;
                const auto &v = j_.at(key);
                if (!v.is_boolean())
                    fail(child(key), "expected true or false");
                return v.get<bool>();
            }

            std::string string(const std::string &key, const std::string &fallback)
            {
                seen_.insert(key);
                if (!has(key))
                    return fallback;
                const auto &v = j_.at(key);
                if (!v.is_string())
                    fail(child(key), "expected a string");
                return v.get<std::string>();
            }

            void finish() const
            {
                for (auto it = j_.begin(); it != j_.end(); ++it)
                    if (!seen_.contains(it.key()))
                        fail(child(it.key()), "unknown key");
            }

        private:
            const json &j_;
            std::string path_;
            std::set<std::string> seen_;
        };

        template <typename F>
        auto wrap_enum(const std::string &path, F &&parse)
        {
            try
            {
                return parse();
            }
            catch (const std::invalid_argument &e)
            {
                fail(path, e.what());
            }
        }

        json point_json(const Point3 &p) { return json::array({p.x, p.y, p.z}); }

        Point3 point_from(const json &j, const std::string &path)
        {
            if (!j.is_array() || j.size() != 3)
                fail(path, "expected [x, y, z]");
            for (const auto &v : j)
                if (!v.is_number())
                    fail(path, "coordinates must be numbers");
            return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
        }

        json pathloss_json(const PathlossParams &p)
        {
            return json{{"n", p.n}, {"b", p.b}, {"sigma", p.sigma}, {"f", p.f}, {"f0", p.f0}};
        }

        PathlossParams pathloss_from(const json &j, const std::string &path, PathlossParams p)
        {
            ObjectReader r(j, path);
            p.n = r.number("n", p.n);
            p.b = r.number("b", p.b);
            p.sigma = r.number("sigma", p.sigma);
            p.f = r.number("f", p.f);
            p.f0 = r.number("f0", p.f0);
            r.finish();
            return p;
        }

        json allocation_json(const ElementAllocation &a)
        {
            json out = json::array();
            for (const auto &block : a.assignments)
                out.push_back(block);
            return out;
        }

        ElementAllocation allocation_from(const json &j, const std::string &path)
        {
            if (!j.is_array())
                fail(path, "expected a list of element index lists, one per receiver");
            ElementAllocation a;
            for (std::size_t u = 0; u < j.size(); ++u)
            {
                if (!j[u].is_array())
                    fail(path + "." + std::to_string(u), "expected a list of element indices");
                std::vector<std::size_t> block;
                for (const auto &e : j[u])
                {
                    if (!e.is_number_integer() || e.get<long long>() < 0)
                        fail(path + "." + std::to_string(u), "element indices must be non-negative integers");
                    block.push_back(e.get<std::size_t>());
                }
                a.assignments.push_back(std::move(block));
            }
            return a;
        }

        ScenarioRis ris_from(const json &j, const std::string &path, double f)
        {
            ObjectReader r(j, path);
            ScenarioRis s;
            if (!r.has("position"))
                fail(path, "missing 'position'");
            s.ris.position = point_from(r.at("position"), r.child("position"));

            if (r.has("orient"))
            {
                ObjectReader o(r.at("orient"), r.child("orient"));
                s.ris.orient.plane = wrap_enum(o.child("plane"), [&] { return plane_from_string(o.string("plane", "XZ")); });
                const auto axis_default = to_string(Orientation::default_axis(s.ris.orient.plane));
                s.ris.orient.tilt_axis = wrap_enum(o.child("tilt_axis"), [&] { return axis_from_string(o.string("tilt_axis", axis_default)); });
                s.ris.orient.tilt_R = o.number("tilt_R", 0.0);
                o.finish();
            }
            else
                r.skip("orient");

            s.ris.n_elements = r.integer<std::size_t>("n_elements", 256);
            s.ris.spacing_d = r.number("spacing_d", 0.5 * wavelength(f));
            s.ris.q_pattern = r.number("q_pattern", s.ris.q_pattern);
            s.ris.alpha = r.number("alpha", s.ris.alpha);
            s.enabled = r.boolean("enabled", true);
            if (r.has("allocation"))
                s.allocation = allocation_from(r.at("allocation"), r.child("allocation"));
            else
                r.skip("allocation");
            r.finish();
            return s;
        }
    }

    std::string format_number(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return buf;
    }

    json to_json(const ScenarioConfig &cfg)
    {
        json j;
        j["tx"] = point_json(cfg.tx);
        json rx = json::array();
        for (const auto &p : cfg.rx)
            rx.push_back(point_json(p));
        j["rx"] = rx;

        json ris = json::array();
        for (const auto &s : cfg.ris_list)
        {
            json e;
            e["position"] = point_json(s.ris.position);
            e["orient"] = json{{"plane", to_string(s.ris.orient.plane)},
                               {"tilt_axis", to_string(s.ris.orient.tilt_axis)},
                               {"tilt_R", s.ris.orient.tilt_R}};
            e["n_elements"] = s.ris.n_elements;
            e["spacing_d"] = s.ris.spacing_d;
            e["q_pattern"] = s.ris.q_pattern;
            e["alpha"] = s.ris.alpha;
            e["enabled"] = s.enabled;
            e["allocation"] = s.allocation ? allocation_json(*s.allocation) : json(nullptr);
            ris.push_back(e);
        }
        j["ris_list"] = ris;

        j["env"] = json{{"mean_clusters", cfg.env.mean_clusters},
                        {"max_scatterers_per_cluster", cfg.env.max_scatterers_per_cluster},
                        {"azimuth_spread_deg", cfg.env.azimuth_spread_deg},
                        {"elevation_spread_deg", cfg.env.elevation_spread_deg},
                        {"cluster_azimuth_range_deg", cfg.env.cluster_azimuth_range_deg},
                        {"cluster_elevation_range_deg", cfg.env.cluster_elevation_range_deg},
                        {"min_cluster_range", cfg.env.min_cluster_range},
                        {"environment", to_string(cfg.env.environment)}};
        j["pl_los"] = pathloss_json(cfg.pl_los);
        j["pl_nlos"] = pathloss_json(cfg.pl_nlos);
        j["los_model"] = json{{"mode", to_string(cfg.los_model.mode)},
                              {"decay_eta", cfg.los_model.decay_eta},
                              {"force_if_above_tx", cfg.los_model.force_if_above_tx}};
        j["budget"] = json{{"pt_dbm", cfg.budget.pt_dbm}, {"n0_dbm", cfg.budget.n0_dbm}};
        j["n_trials"] = cfg.n_trials;
        j["master_seed"] = cfg.master_seed;
        j["bootstrap_resamples"] = cfg.bootstrap_resamples;
        j["flags"] = json{{"direct_phase_sign", to_string(cfg.flags.direct_phase_sign)},
                          {"offblock", to_string(cfg.flags.offblock)},
                          {"shadow_on_los", cfg.flags.shadow_on_los},
                          {"shadow_on_scatter", cfg.flags.shadow_on_scatter},
                          {"resample_geometry", cfg.flags.resample_geometry}};
        return j;
    }

    ScenarioConfig scenario_from_json(const json &j)
    {
        ScenarioConfig cfg;
        ObjectReader r(j, "");

        if (r.has("tx"))
            cfg.tx = point_from(r.at("tx"), "tx");
        else
            r.skip("tx");
        if (r.has("rx"))
        {
            const auto &rx = r.at("rx");
            cfg.rx.clear();
            if (rx.is_array() && !rx.empty() && rx[0].is_number())
                cfg.rx.push_back(point_from(rx, "rx"));
            else if (rx.is_array())
                for (std::size_t u = 0; u < rx.size(); ++u)
                    cfg.rx.push_back(point_from(rx[u], "rx." + std::to_string(u)));
            else
                fail("rx", "expected a point or a list of points");
        }

        if (r.has("pl_los"))
            cfg.pl_los = pathloss_from(r.at("pl_los"), "pl_los", cfg.pl_los);
        if (r.has("pl_nlos"))
            cfg.pl_nlos = pathloss_from(r.at("pl_nlos"), "pl_nlos", cfg.pl_nlos);

        if (r.has("ris_list"))
        {
            const auto &list = r.at("ris_list");
            if (!list.is_array())
                fail("ris_list", "expected a list");
            for (std::size_t m = 0; m < list.size(); ++m)
                cfg.ris_list.push_back(ris_from(list[m], "ris_list." + std::to_string(m), cfg.pl_los.f));
        }

        if (r.has("env"))
        {
            ObjectReader e(r.at("env"), "env");
            cfg.env.mean_clusters = e.number("mean_clusters", cfg.env.mean_clusters);
            cfg.env.max_scatterers_per_cluster = e.integer<int>("max_scatterers_per_cluster", cfg.env.max_scatterers_per_cluster);
            cfg.env.azimuth_spread_deg = e.number("azimuth_spread_deg", cfg.env.azimuth_spread_deg);
            cfg.env.elevation_spread_deg = e.number("elevation_spread_deg", cfg.env.elevation_spread_deg);
            cfg.env.cluster_azimuth_range_deg = e.number("cluster_azimuth_range_deg", cfg.env.cluster_azimuth_range_deg);
            cfg.env.cluster_elevation_range_deg = e.number("cluster_elevation_range_deg", cfg.env.cluster_elevation_range_deg);
            cfg.env.min_cluster_range = e.number("min_cluster_range", cfg.env.min_cluster_range);
            cfg.env.environment = wrap_enum("env.environment", [&] { return environment_from_string(e.string("environment", "INDOOR")); });
            e.finish();
        }

        if (r.has("los_model"))
        {
            ObjectReader l(r.at("los_model"), "los_model");
            cfg.los_model.mode = wrap_enum("los_model.mode", [&] { return los_mode_from_string(l.string("mode", "PROBABILISTIC")); });
            cfg.los_model.decay_eta = l.number("decay_eta", cfg.los_model.decay_eta);
            cfg.los_model.force_if_above_tx = l.boolean("force_if_above_tx", cfg.los_model.force_if_above_tx);
            l.finish();
        }

        if (r.has("budget"))
        {
            ObjectReader b(r.at("budget"), "budget");
            cfg.budget.pt_dbm = b.number("pt_dbm", cfg.budget.pt_dbm);
            cfg.budget.n0_dbm = b.number("n0_dbm", cfg.budget.n0_dbm);
            b.finish();
        }

        cfg.n_trials = r.integer<std::size_t>("n_trials", cfg.n_trials);
        cfg.master_seed = r.integer<std::uint64_t>("master_seed", cfg.master_seed);
        cfg.bootstrap_resamples = r.integer<std::size_t>("bootstrap_resamples", cfg.bootstrap_resamples);

        if (r.has("flags"))
        {
            ObjectReader f(r.at("flags"), "flags");
            cfg.flags.direct_phase_sign = wrap_enum("flags.direct_phase_sign", [&] {
                return direct_phase_sign_from_string(f.string("direct_phase_sign", "paper"));
            });
            cfg.flags.offblock = wrap_enum("flags.offblock", [&] { return offblock_from_string(f.string("offblock", "include")); });
            cfg.flags.shadow_on_los = f.boolean("shadow_on_los", cfg.flags.shadow_on_los);
            cfg.flags.shadow_on_scatter = f.boolean("shadow_on_scatter", cfg.flags.shadow_on_scatter);
            cfg.flags.resample_geometry = f.boolean("resample_geometry", cfg.flags.resample_geometry);
            f.finish();
        }

        // null-valued sections mean "use the defaults"
        for (const char *key : {"rx", "ris_list", "env", "pl_los", "pl_nlos", "los_model", "budget", "flags"})
            r.skip(key);
        r.finish();
        return cfg;
    }

    ScenarioConfig load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("Cannot open config file '" + path + "'.");
        json j;
        try
        {
            j = json::parse(in);
        }
        catch (const json::parse_error &e)
        {
            throw std::invalid_argument("Config file '" + path + "' is not valid JSON: " + e.what());
        }
        return scenario_from_json(j);
    }

    json to_json(const ClusterSet &clusters)
    {
        json j;
        j["tx"] = point_json(clusters.tx);
        j["ris"] = point_json(clusters.ris);
        j["rx"] = point_json(clusters.rx);
        j["counts"] = clusters.counts;
        j["gamma"] = clusters.gamma;
        json sc = json::array();
        for (const auto &s : clusters.scatterers)
            sc.push_back(json{{"position", point_json(s.position)},
                              {"beta", json::array({s.beta.real(), s.beta.imag()})},
                              {"cluster_id", s.cluster_id},
                              {"d_tx", s.d_tx},
                              {"b_ris", s.b_ris},
                              {"b_rx", s.b_rx}});
        j["scatterers"] = sc;
        return j;
    }

    ClusterSet cluster_set_from_json(const json &j)
    {
        ObjectReader r(j, "");
        ClusterSet c;
        c.tx = point_from(r.at("tx"), "tx");
        c.ris = point_from(r.at("ris"), "ris");
        c.rx = point_from(r.at("rx"), "rx");
        for (const auto &v : r.at("counts"))
        {
            if (!v.is_number_integer() || v.get<int>() < 1)
                fail("counts", "scatterer counts must be positive integers");
            c.counts.push_back(v.get<int>());
        }
        c.gamma = r.number("gamma", 0.0);

        for (std::size_t i = 0; i < r.at("scatterers").size(); ++i)
        {
            const std::string path = "scatterers." + std::to_string(i);
            ObjectReader s(j.at("scatterers")[i], path);
            Scatterer sc;
            sc.position = point_from(s.at("position"), path + ".position");
            const auto &beta = s.at("beta");
            if (!beta.is_array() || beta.size() != 2)
                fail(path + ".beta", "expected [re, im]");
            sc.beta = {beta[0].get<double>(), beta[1].get<double>()};
            sc.cluster_id = s.integer<std::size_t>("cluster_id", 0);
            sc.d_tx = s.number("d_tx", 0.0);
            sc.b_ris = s.number("b_ris", 0.0);
            sc.b_rx = s.number("b_rx", 0.0);
            s.finish();

            constexpr double tol = 1e-9;
            if (std::abs(sc.d_tx - distance(c.tx, sc.position)) > tol || std::abs(sc.b_ris - distance(sc.position, c.ris)) > tol ||
                std::abs(sc.b_rx - distance(sc.position, c.rx)) > tol)
                fail(path, "stored distances disagree with the scatterer position");
            if (sc.cluster_id >= c.counts.size())
                fail(path + ".cluster_id", "refers to a cluster that does not exist");
            c.scatterers.push_back(sc);
        }
        r.finish();

        long total = 0;
        for (int s : c.counts)
            total += s;
        if (std::size_t(total) != c.scatterers.size())
            fail("counts", "sum of counts does not match the number of scatterers");
        if (std::abs(c.gamma - cluster_gamma(c.counts)) > 1e-12)
            fail("gamma", "does not match sqrt(1 / sum(counts))");
        return c;
    }

    void save_cluster_set(const ClusterSet &clusters, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("Cannot write '" + path + "'.");
        out << to_json(clusters).dump(2) << '\n';
    }

    ClusterSet load_cluster_set(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("Cannot open '" + path + "'.");
        return cluster_set_from_json(json::parse(in));
    }

    bool apply_override(json &j, const std::string &path, const std::string &value_text)
    {
        json value;
        try
        {
            value = json::parse(value_text);
        }
        catch (const json::parse_error &)
        {
            value = value_text;
        }

        std::vector<std::string> parts;
        std::stringstream ss(path);
        for (std::string p; std::getline(ss, p, '.');)
            parts.push_back(p);
        if (parts.empty())
            return false;

        json *node = &j;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        {
            const auto &p = parts[i];
            if (node->is_array())
            {
                char *end = nullptr;
                const auto idx = std::strtoul(p.c_str(), &end, 10);
                if (*end != '\0' || idx >= node->size())
                    return false;
                node = &(*node)[idx];
            }
            else if (node->is_object() && node->contains(p))
                node = &(*node)[p];
            else
                return false;
        }

        const auto &last = parts.back();
        if (node->is_array())
        {
            char *end = nullptr;
            const auto idx = std::strtoul(last.c_str(), &end, 10);
            if (*end != '\0' || idx >= node->size())
                return false;
            (*node)[idx] = value;
            return true;
        }
        if (!node->is_object())
            return false;
        (*node)[last] = value;
        return true;
    }
}
