// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fasperf/errors.hpp"
#include "fasperf/sweep.hpp"

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    std::string out = "-";
    std::string format = "csv";
    double quad_tol = 1e-9;
    double bound_c = 1.1;
    bool timings = false;
};

fas::EmitFormat parse_format(const std::string &f) {
    if (f == "csv")
        return fas::EmitFormat::csv;
    if (f == "json")
        return fas::EmitFormat::json;
    throw fas::validation_error("format must be csv or json");
}

fas::LayoutKind parse_layout(const std::string &s) {
    if (s == "ula")
        return fas::LayoutKind::ula;
    if (s == "upa")
        return fas::LayoutKind::upa;
    throw fas::validation_error("layout must be ula or upa");
}

void apply_globals(fas::SweepSpec &spec, const GlobalOpts &g) {
    spec.sim.master_seed = g.seed;
    spec.sim.num_samples = g.samples;
    spec.numerics.quad_rel_tol = g.quad_tol;
    spec.numerics.bound_c = g.bound_c;
}

void run_and_emit(const fas::SweepSpec &spec, const GlobalOpts &g) {
    const auto rows = fas::run_sweep(spec);
    fas::ResultTable table;
    table.rows = rows;
    fas::emit_to_destination(table, parse_format(g.format), g.out, g.timings);
}

int run(int argc, char **argv) {
    CLI::App app{"fasperf - outage probability and ergodic rate of a "
                 "port-selection fluid antenna receiver under spatially "
                 "correlated Rician fading"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Master seed for Monte Carlo estimators");
    app.add_option("--samples", g.samples, "Monte Carlo sample count");
    app.add_option("--out", g.out, "Output path ('-' = stdout)");
    app.add_option("--format", g.format, "Output format: csv or json");
    app.add_option("--quad-tol", g.quad_tol,
                   "Relative tolerance of adaptive quadrature");
    app.add_option("--bound-c", g.bound_c,
                   "Constant c > 1 of the closed-form outage upper bound");
    app.add_flag("--timings", g.timings,
                 "Append a wall_time_ms column (not reproducible run-to-run)");

    // Shared channel parameters.
    double kappa = 0.0, aperture = 2.0, gamma_db = 0.0;
    int ports = 2;
    std::string layout = "ula";
    auto add_channel_opts = [&](CLI::App *cmd, bool with_gamma) {
        cmd->add_option("--kappa", kappa, "Rician factor (linear)");
        cmd->add_option("--ports", ports, "Number of ports N");
        cmd->add_option("--aperture", aperture, "Aperture W in wavelengths");
        cmd->add_option("--layout", layout, "Port layout: ula or upa");
        if (with_gamma)
            cmd->add_option("--gamma-db", gamma_db, "SNR threshold in dB");
    };

    // op: analytical outage probability at one point.
    auto *op_cmd = app.add_subcommand("op", "Analytical outage probability");
    std::string op_metric = "op_exact";
    add_channel_opts(op_cmd, true);
    op_cmd->add_option("--metric", op_metric,
                       "op_exact, op_lower, op_upper or op_series");

    // er: analytical ergodic rate at one point.
    auto *er_cmd = app.add_subcommand("er", "Analytical ergodic rate");
    std::string er_metric = "er_exact";
    add_channel_opts(er_cmd, false);
    er_cmd->add_option("--metric", er_metric,
                       "er_exact, er_lower or er_upper");

    // mc: Monte Carlo estimate of outage or rate.
    auto *mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate");
    std::string mc_metric = "op";
    add_channel_opts(mc_cmd, true);
    mc_cmd->add_option("--metric", mc_metric, "op or er");

    // mrc: maximum-ratio-combining baseline.
    auto *mrc_cmd = app.add_subcommand("mrc", "MRC outage baseline");
    int branches = 5;
    bool mrc_mc = false;
    mrc_cmd->add_option("--branches", branches, "Number of MRC branches L");
    mrc_cmd->add_option("--kappa", kappa, "Rician factor (linear)");
    mrc_cmd->add_option("--gamma-db", gamma_db, "SNR threshold in dB");
    mrc_cmd->add_flag("--mc", mrc_mc, "Estimate empirically instead of the "
                                      "closed form");

    // sweep: one metric along one axis.
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep a metric along an axis");
    std::string sweep_metric = "op_exact", sweep_axis = "N", config_path;
    std::vector<double> axis_values;
    add_channel_opts(sweep_cmd, true);
    sweep_cmd->add_option("--metric", sweep_metric, "Any metric name");
    sweep_cmd->add_option("--axis", sweep_axis,
                          "Axis: N, gamma_th_db, kappa or W");
    sweep_cmd->add_option("--values", axis_values,
                          "Axis values (strictly increasing)")
        ->delimiter(',');
    sweep_cmd->add_option("--branches", branches, "MRC branch count");
    sweep_cmd->add_option("--config", config_path,
                          "JSON file mirroring the sweep fields; command-line "
                          "flags override it");

    // figure: stock presets.
    auto *fig_cmd = app.add_subcommand("figure", "Run a stock figure preset");
    std::string fig_name;
    fig_cmd->add_option("--name", fig_name, "Preset name")->required();
    bool list_figures = false;
    fig_cmd->add_flag("--list", list_figures, "List preset names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    auto spec_from_flags = [&](fas::Metric m, bool single_point) {
        fas::SweepSpec spec;
        spec.metric = m;
        spec.layout = parse_layout(layout);
        spec.kappa = kappa;
        spec.gamma_db = gamma_db;
        spec.n_ports = ports;
        spec.aperture = aperture;
        spec.mrc_branches = branches;
        if (single_point) {
            spec.axis = fas::Axis::gamma_th_db;
            spec.axis_values = {gamma_db};
        }
        apply_globals(spec, g);
        return spec;
    };

    if (op_cmd->parsed()) {
        run_and_emit(spec_from_flags(fas::metric_from_name(op_metric), true), g);
    } else if (er_cmd->parsed()) {
        run_and_emit(spec_from_flags(fas::metric_from_name(er_metric), true), g);
    } else if (mc_cmd->parsed()) {
        fas::Metric m;
        if (mc_metric == "op")
            m = fas::Metric::op_mc;
        else if (mc_metric == "er")
            m = fas::Metric::er_mc;
        else
            throw fas::validation_error("mc metric must be op or er");
        run_and_emit(spec_from_flags(m, true), g);
    } else if (mrc_cmd->parsed()) {
        run_and_emit(spec_from_flags(
                         mrc_mc ? fas::Metric::mrc_mc : fas::Metric::op_mrc,
                         true),
                     g);
    } else if (sweep_cmd->parsed()) {
        fas::SweepSpec spec;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f)
                throw fas::io_error("cannot read config '" + config_path + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            spec = fas::sweep_from_json_text(ss.str());
        }
        // Flags override file values where given.
        if (sweep_cmd->count("--metric") || config_path.empty())
            spec.metric = fas::metric_from_name(sweep_metric);
        if (sweep_cmd->count("--axis") || config_path.empty())
            spec.axis = fas::axis_from_name(sweep_axis);
        if (!axis_values.empty())
            spec.axis_values = axis_values;
        if (sweep_cmd->count("--kappa") || config_path.empty())
            spec.kappa = kappa;
        if (sweep_cmd->count("--gamma-db") || config_path.empty())
            spec.gamma_db = gamma_db;
        if (sweep_cmd->count("--ports") || config_path.empty())
            spec.n_ports = ports;
        if (sweep_cmd->count("--aperture") || config_path.empty())
            spec.aperture = aperture;
        if (sweep_cmd->count("--layout") || config_path.empty())
            spec.layout = parse_layout(layout);
        if (sweep_cmd->count("--branches") || config_path.empty())
            spec.mrc_branches = branches;
        apply_globals(spec, g);
        run_and_emit(spec, g);
    } else if (fig_cmd->parsed()) {
        if (list_figures) {
            for (const auto &n : fas::figure_names())
                std::cout << n << "\n";
            return 0;
        }
        fas::ResultTable table;
        table.has_series = true;
        auto expanded = fas::expand_figure(fig_name);
        for (std::size_t si = 0; si < expanded.size(); ++si) {
            auto &series = expanded[si];
            apply_globals(series.spec, g);
            // Monte Carlo series get distinct sub-seeds per curve.
            series.spec.sim.master_seed = fas::mix64(g.seed ^ fas::mix64(si));
            const auto rows = fas::run_sweep(series.spec);
            for (const auto &r : rows) {
                table.series.push_back(series.name);
                table.rows.push_back(r);
            }
        }
        fas::emit_to_destination(table, parse_format(g.format), g.out,
                                 g.timings);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const fas::validation_error &e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return 1;
    } catch (const fas::layout_error &e) {
        std::cerr << "error: layout: " << e.what() << "\n";
        return 1;
    } catch (const fas::io_error &e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 3;
    } catch (const fas::accuracy_error &e) {
        std::cerr << "error: accuracy: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
