// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fasperf/sweep.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fasperf/errors.hpp"

namespace fas {

namespace {

const std::map<std::string, Metric> metric_names{
    {"op_exact", Metric::op_exact},   {"op_lower", Metric::op_lower},
    {"op_upper", Metric::op_upper},   {"op_series", Metric::op_series},
    {"er_exact", Metric::er_exact},   {"er_lower", Metric::er_lower},
    {"er_upper", Metric::er_upper},   {"op_mc", Metric::op_mc},
    {"er_mc", Metric::er_mc},         {"op_mrc", Metric::op_mrc},
    {"mrc_mc", Metric::mrc_mc},
};

const std::map<std::string, Axis> axis_names{
    {"N", Axis::n_ports},
    {"gamma_th_db", Axis::gamma_th_db},
    {"kappa", Axis::kappa},
    {"W", Axis::aperture},
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

bool is_mc_metric(Metric m) {
    return m == Metric::op_mc || m == Metric::er_mc || m == Metric::mrc_mc;
}

struct PointParams {
    int n_ports;
    double aperture;
    double kappa;
    double gamma_linear;
};

CorrelationProfile profile_for(LayoutKind layout, int n_ports,
                               double aperture) {
    if (n_ports == 1)
        return CorrelationProfile::single_port();
    const PortLayout pl = layout == LayoutKind::ula
                              ? make_ula(n_ports, aperture)
                              : make_upa(n_ports, aperture);
    return correlation_profile(pl);
}

// Evaluate one grid point; returns (value, error estimate).
std::pair<double, double> evaluate_point(const SweepSpec &spec,
                                         const PointParams &p,
                                         std::uint64_t point_seed) {
    const RicianSpec rician = rician_from_kappa(p.kappa);
    if (spec.metric == Metric::op_mrc || spec.metric == Metric::mrc_mc) {
        if (spec.metric == Metric::op_mrc)
            return {op_mrc(spec.mrc_branches, p.kappa, p.gamma_linear,
                           spec.numerics.series),
                    0.0};
        SimConfig sim = spec.sim;
        sim.master_seed = point_seed;
        const auto est =
            mrc_empirical(spec.mrc_branches, p.kappa, p.gamma_linear, sim);
        return {est.value, est.std_error};
    }

    const CorrelationProfile corr =
        profile_for(spec.layout, p.n_ports, p.aperture);
    const OutageQuery q{p.gamma_linear, rician, corr};
    switch (spec.metric) {
    case Metric::op_exact: {
        const MetricResult r = op_exact(q, spec.numerics);
        return {r.value, r.abs_error_estimate};
    }
    case Metric::op_lower:
        return {op_lower_bound(q, spec.numerics.series), 0.0};
    case Metric::op_upper:
        return {op_upper_bound(q, spec.numerics), 0.0};
    case Metric::op_series:
        return {op_lower_series(q, spec.numerics.series), 0.0};
    case Metric::er_exact: {
        const MetricResult r = er_exact(rician, corr, spec.numerics);
        return {r.value, r.abs_error_estimate};
    }
    case Metric::er_lower:
        return {er_lower_closed(rician, corr, spec.numerics), 0.0};
    case Metric::er_upper: {
        const MetricResult r = er_upper(rician, corr, spec.numerics);
        return {r.value, r.abs_error_estimate};
    }
    case Metric::op_mc: {
        SimConfig sim = spec.sim;
        sim.master_seed = point_seed;
        const auto est = op_empirical(q, sim);
        return {est.value, est.std_error};
    }
    case Metric::er_mc: {
        SimConfig sim = spec.sim;
        sim.master_seed = point_seed;
        const auto est = er_empirical(rician, corr, sim);
        return {est.value, est.std_error};
    }
    default:
        throw validation_error("unhandled metric");
    }
}

PointParams params_at(const SweepSpec &spec, double axis_value) {
    PointParams p{spec.n_ports, spec.aperture, spec.kappa,
                  db_to_linear(spec.gamma_db)};
    switch (spec.axis) {
    case Axis::n_ports: {
        const double rounded = std::round(axis_value);
        if (std::abs(rounded - axis_value) > 1e-9 || rounded < 1)
            throw validation_error("port-count axis values must be positive "
                                   "integers");
        p.n_ports = static_cast<int>(rounded);
        break;
    }
    case Axis::gamma_th_db:
        p.gamma_linear = db_to_linear(axis_value);
        break;
    case Axis::kappa:
        p.kappa = axis_value;
        break;
    case Axis::aperture:
        p.aperture = axis_value;
        break;
    }
    return p;
}

void validate_spec(const SweepSpec &spec) {
    if (spec.axis_values.empty())
        throw validation_error("sweep has no axis values");
    for (std::size_t i = 1; i < spec.axis_values.size(); ++i)
        if (!(spec.axis_values[i] > spec.axis_values[i - 1]))
            throw validation_error("axis values must be strictly increasing");
    // Materialize every point once up front so that bad combinations (for
    // example a planar layout with a non-square port count) fail before any
    // computation starts.
    for (double v : spec.axis_values) {
        const PointParams p = params_at(spec, v);
        if (!(p.kappa >= 0.0))
            throw validation_error("kappa must be nonnegative");
        if (!(p.gamma_linear > 0.0))
            throw validation_error("gamma threshold must be positive");
        if (spec.metric == Metric::op_mrc || spec.metric == Metric::mrc_mc) {
            if (spec.mrc_branches < 1)
                throw validation_error("MRC branch count must be >= 1");
            continue;
        }
        profile_for(spec.layout, p.n_ports, p.aperture);
    }
}

} // namespace

Metric metric_from_name(const std::string &name) {
    const auto it = metric_names.find(name);
    if (it == metric_names.end())
        throw validation_error("unknown metric '" + name + "'");
    return it->second;
}

std::string metric_name(Metric m) {
    for (const auto &[k, v] : metric_names)
        if (v == m)
            return k;
    return "?";
}

Axis axis_from_name(const std::string &name) {
    const auto it = axis_names.find(name);
    if (it == axis_names.end())
        throw validation_error("unknown axis '" + name + "' (use N, "
                               "gamma_th_db, kappa, W)");
    return it->second;
}

std::string axis_name(Axis a) {
    for (const auto &[k, v] : axis_names)
        if (v == a)
            return k;
    return "?";
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    validate_spec(spec);
    const std::size_t n = spec.axis_values.size();
    std::vector<SweepRow> rows(n);

    const int threads = std::min<std::size_t>(
        is_mc_metric(spec.metric) ? 1 : resolve_threads(0), n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            const double axis_value = spec.axis_values[i];
            const PointParams p = params_at(spec, axis_value);
            // Per-point seed so the estimate at a grid point does not depend
            // on which other points are in the sweep.
            const std::uint64_t seed =
                mix64(spec.sim.master_seed ^ mix64(0xfa5u) ^ mix64(i));
            const auto t0 = std::chrono::steady_clock::now();
            const auto [value, err] = evaluate_point(spec, p, seed);
            const auto t1 = std::chrono::steady_clock::now();
            rows[i] = SweepRow{
                axis_value, value, err,
                std::chrono::duration<double, std::milli>(t1 - t0).count()};
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }
    return rows;
}

std::vector<std::string> figure_names() {
    return {"fig_op_vs_N",      "fig_op_vs_snr",    "fig_op_vs_kappa",
            "fig_bounds",       "fig_op_vs_W",      "fig_fas_vs_mrc",
            "fig_er_vs_N",      "fig_ula_vs_upa_op", "fig_ula_vs_upa_er"};
}

std::vector<FigureSeries> expand_figure(const std::string &name) {
    auto seq = [](double lo, double hi, double step) {
        std::vector<double> v;
        for (double x = lo; x <= hi + 1e-9; x += step)
            v.push_back(x);
        return v;
    };
    const std::vector<double> kappas{0.0, 1.0, 10.0};
    std::vector<FigureSeries> out;

    auto base = [&](Metric m) {
        SweepSpec s;
        s.metric = m;
        s.aperture = 2.0;
        return s;
    };
    auto label = [](const std::string &stem, double kappa) {
        std::ostringstream os;
        os << stem << " kappa=" << kappa;
        return os.str();
    };

    if (name == "fig_op_vs_N") {
        for (double k : kappas)
            for (double gdb : {0.0, 2.0}) {
                SweepSpec s = base(Metric::op_exact);
                s.axis = Axis::n_ports;
                s.axis_values = seq(1, 100, 3);
                s.kappa = k;
                s.gamma_db = gdb;
                std::ostringstream os;
                os << "kappa=" << k << " gamma_db=" << gdb;
                out.push_back({os.str(), s});
            }
    } else if (name == "fig_op_vs_snr") {
        for (double k : kappas)
            for (int n : {5, 10}) {
                SweepSpec s = base(Metric::op_exact);
                s.axis = Axis::gamma_th_db;
                s.axis_values = seq(-10, 10, 1);
                s.kappa = k;
                s.n_ports = n;
                std::ostringstream os;
                os << "kappa=" << k << " N=" << n;
                out.push_back({os.str(), s});
            }
    } else if (name == "fig_op_vs_kappa") {
        for (int n : {5, 10})
            for (double gdb : {3.0, 6.0}) {
                SweepSpec s = base(Metric::op_exact);
                s.axis = Axis::kappa;
                s.axis_values = seq(0, 30, 1);
                s.n_ports = n;
                s.gamma_db = gdb;
                std::ostringstream os;
                os << "N=" << n << " gamma_db=" << gdb;
                out.push_back({os.str(), s});
            }
    } else if (name == "fig_bounds") {
        for (double gdb : {0.0, 5.0})
            for (double k : kappas)
                for (Metric m :
                     {Metric::op_lower, Metric::op_exact, Metric::op_upper}) {
                    SweepSpec s = base(m);
                    s.axis = Axis::n_ports;
                    s.axis_values = seq(2, 50, 4);
                    s.kappa = k;
                    s.gamma_db = gdb;
                    std::ostringstream os;
                    os << metric_name(m) << " kappa=" << k
                       << " gamma_db=" << gdb;
                    out.push_back({os.str(), s});
                }
    } else if (name == "fig_op_vs_W") {
        for (double w : {1.0, 2.0, 5.0})
            for (double k : {0.0, 10.0}) {
                SweepSpec s = base(Metric::op_exact);
                s.axis = Axis::n_ports;
                s.axis_values = seq(10, 50, 5);
                s.kappa = k;
                s.aperture = w;
                s.gamma_db = 2.0;
                std::ostringstream os;
                os << "W=" << w << " kappa=" << k;
                out.push_back({os.str(), s});
            }
    } else if (name == "fig_fas_vs_mrc") {
        for (double k : kappas) {
            SweepSpec s = base(Metric::op_exact);
            s.axis = Axis::n_ports;
            s.axis_values = seq(2, 80, 2);
            s.kappa = k;
            s.gamma_db = 2.0;
            out.push_back({label("fas", k), s});
            for (int l : {5, 8}) {
                SweepSpec m = base(Metric::op_mrc);
                m.axis = Axis::n_ports;
                m.axis_values = seq(2, 80, 2);
                m.kappa = k;
                m.gamma_db = 2.0;
                m.mrc_branches = l;
                std::ostringstream os;
                os << "mrc L=" << l << " kappa=" << k;
                out.push_back({os.str(), m});
            }
        }
    } else if (name == "fig_er_vs_N") {
        for (double k : kappas)
            for (Metric m : {Metric::er_mc, Metric::er_lower, Metric::er_upper}) {
                SweepSpec s = base(m);
                s.axis = Axis::n_ports;
                s.axis_values = {1, 2, 4, 6, 8, 10, 12, 16, 20};
                if (m == Metric::er_lower)
                    s.axis_values = {2, 4, 6, 8, 10, 12, 16, 20};
                s.kappa = k;
                s.sim.num_samples = 10000;
                std::ostringstream os;
                os << metric_name(m) << " kappa=" << k;
                out.push_back({os.str(), s});
            }
    } else if (name == "fig_ula_vs_upa_op") {
        for (double gdb : {0.0, 2.0})
            for (LayoutKind lk : {LayoutKind::ula, LayoutKind::upa}) {
                SweepSpec s = base(Metric::op_exact);
                s.axis = Axis::n_ports;
                s.axis_values = {4, 9, 16, 25, 36, 49, 64, 81, 100};
                s.layout = lk;
                s.kappa = 1.0;
                s.gamma_db = gdb;
                std::ostringstream os;
                os << (lk == LayoutKind::ula ? "ula" : "upa")
                   << " gamma_db=" << gdb;
                out.push_back({os.str(), s});
            }
    } else if (name == "fig_ula_vs_upa_er") {
        for (double k : kappas)
            for (LayoutKind lk : {LayoutKind::ula, LayoutKind::upa}) {
                SweepSpec s = base(Metric::er_mc);
                s.axis = Axis::n_ports;
                s.axis_values = {4, 9, 16, 25, 36, 49, 64};
                s.layout = lk;
                s.kappa = k;
                s.sim.num_samples = 10000;
                std::ostringstream os;
                os << (lk == LayoutKind::ula ? "ula" : "upa") << " kappa=" << k;
                out.push_back({os.str(), s});
            }
    } else {
        throw validation_error("unknown figure preset '" + name + "'");
    }
    return out;
}

SweepSpec sweep_from_json_text(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw validation_error(std::string("config: ") + e.what());
    }
    SweepSpec spec;
    for (const auto &[key, value] : j.items()) {
        if (key == "metric")
            spec.metric = metric_from_name(value.get<std::string>());
        else if (key == "layout") {
            const std::string s = value.get<std::string>();
            if (s == "ula")
                spec.layout = LayoutKind::ula;
            else if (s == "upa")
                spec.layout = LayoutKind::upa;
            else
                throw validation_error("config: layout must be ula or upa");
        } else if (key == "axis")
            spec.axis = axis_from_name(value.get<std::string>());
        else if (key == "axis_values")
            spec.axis_values = value.get<std::vector<double>>();
        else if (key == "kappa")
            spec.kappa = value.get<double>();
        else if (key == "gamma_db")
            spec.gamma_db = value.get<double>();
        else if (key == "n_ports")
            spec.n_ports = value.get<int>();
        else if (key == "aperture")
            spec.aperture = value.get<double>();
        else if (key == "mrc_branches")
            spec.mrc_branches = value.get<int>();
        else if (key == "quad_rel_tol")
            spec.numerics.quad_rel_tol = value.get<double>();
        else if (key == "bound_c")
            spec.numerics.bound_c = value.get<double>();
        else if (key == "num_samples")
            spec.sim.num_samples = value.get<std::uint64_t>();
        else if (key == "master_seed")
            spec.sim.master_seed = value.get<std::uint64_t>();
        else
            throw validation_error("config: unknown key '" + key + "'");
    }
    return spec;
}

namespace {

std::string shortest_repr(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

void emit(const ResultTable &table, EmitFormat format, std::ostream &out,
          bool include_timings) {
    if (table.rows.empty())
        throw validation_error("emit: result table is empty");
    if (table.has_series && table.series.size() != table.rows.size())
        throw validation_error("emit: series labels do not match rows");

    if (format == EmitFormat::csv) {
        if (table.has_series)
            out << "series,";
        out << "axis_value,metric_value,error_estimate";
        if (include_timings)
            out << ",wall_time_ms";
        out << "\n";
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const SweepRow &r = table.rows[i];
            if (table.has_series)
                out << table.series[i] << ",";
            out << shortest_repr(r.axis_value) << ","
                << shortest_repr(r.metric_value) << ","
                << shortest_repr(r.error_estimate);
            if (include_timings)
                out << "," << shortest_repr(r.wall_time_ms);
            out << "\n";
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const SweepRow &r = table.rows[i];
            nlohmann::ordered_json obj;
            if (table.has_series)
                obj["series"] = table.series[i];
            obj["axis_value"] = r.axis_value;
            obj["metric_value"] = r.metric_value;
            obj["error_estimate"] = r.error_estimate;
            if (include_timings)
                obj["wall_time_ms"] = r.wall_time_ms;
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << "\n";
    }
    if (!out)
        throw io_error("emit: write failed");
}

void emit_to_destination(const ResultTable &table, EmitFormat format,
                         const std::string &path, bool include_timings) {
    if (path.empty() || path == "-") {
        emit(table, format, std::cout, include_timings);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open '" + path + "' for writing");
    emit(table, format, f, include_timings);
    if (!f)
        throw io_error("write to '" + path + "' failed");
}

} // namespace fas
