// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fasperf/analysis.hpp"
#include "fasperf/montecarlo.hpp"

namespace fas {

enum class Metric {
    op_exact,
    op_lower,
    op_upper,
    op_series,
    er_exact,
    er_lower,
    er_upper,
    op_mc,
    er_mc,
    op_mrc,
    mrc_mc,
};

enum class Axis { n_ports, gamma_th_db, kappa, aperture };

Metric metric_from_name(const std::string &name);
std::string metric_name(Metric m);
Axis axis_from_name(const std::string &name);
std::string axis_name(Axis a);

/// One sweep: a metric evaluated along one axis with every other parameter
/// fixed.  Axis values must be strictly increasing.  gamma values on the
/// gamma_th_db axis are in dB and converted once, via 10^(dB/10), when the
/// point is evaluated; the fixed gamma_db field follows the same rule.
struct SweepSpec {
    Metric metric = Metric::op_exact;
    LayoutKind layout = LayoutKind::ula;
    Axis axis = Axis::n_ports;
    std::vector<double> axis_values;

    // Fixed parameters (ignored when swept or not consumed by the metric).
    double kappa = 0.0;
    double gamma_db = 0.0;
    int n_ports = 2;
    double aperture = 2.0;
    int mrc_branches = 5;

    NumericsConfig numerics{};
    SimConfig sim{};
};

struct SweepRow {
    double axis_value = 0.0;
    double metric_value = 0.0;
    double error_estimate = 0.0;
    double wall_time_ms = 0.0;
};

/// Rows of one or more sweeps.  `series` labels are empty for a plain sweep
/// and name the curve for figure presets.
struct ResultTable {
    bool has_series = false;
    std::vector<std::string> series;
    std::vector<SweepRow> rows;
};

/// Validates the spec (UPA port counts must be perfect squares, axis values
/// strictly increasing, ...) before computing anything, then evaluates every
/// axis point.  Points may be computed concurrently; rows always come back
/// in axis order and Monte Carlo points derive their seed from
/// (sim.master_seed, point index), so results are deterministic.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

struct FigureSeries {
    std::string name;
    SweepSpec spec;
};

/// Named presets reproducing the stock result figures (outage versus ports,
/// threshold, Rician factor, aperture, bounds, MRC baseline, rate curves,
/// linear-versus-planar comparisons).  Expansion is pure: the same name
/// always yields the same specs.
std::vector<FigureSeries> expand_figure(const std::string &name);
std::vector<std::string> figure_names();

/// Parse a SweepSpec from a JSON document mirroring the field names above.
/// Unknown keys raise validation_error.
SweepSpec sweep_from_json_text(const std::string &text);

enum class EmitFormat { csv, json };

/// Serialize rows: CSV with a header row, '.' decimal separator, ','
/// delimiter, LF line endings, and shortest representations that parse back
/// to the identical doubles; JSON as an array of row objects with the same
/// field names.  Wall-clock timings are not reproducible run to run, so the
/// column is opt-in; without it equal seeds yield byte-identical output.
void emit(const ResultTable &table, EmitFormat format, std::ostream &out,
          bool include_timings = false);

/// emit() to a file path, or to stdout when path is "-".
void emit_to_destination(const ResultTable &table, EmitFormat format,
                         const std::string &path, bool include_timings = false);

} // namespace fas
