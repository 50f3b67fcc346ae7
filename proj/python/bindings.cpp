// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fasperf/analysis.hpp"
#include "fasperf/channel.hpp"
#include "fasperf/errors.hpp"
#include "fasperf/montecarlo.hpp"
#include "fasperf/specfun.hpp"
#include "fasperf/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

fas::CorrelationProfile make_profile(const std::string &layout, int n_ports,
                                     double aperture) {
    if (n_ports == 1)
        return fas::CorrelationProfile::single_port();
    if (layout != "ula" && layout != "upa")
        throw fas::validation_error("layout must be ula or upa");
    return fas::correlation_profile(layout == "ula"
                                        ? fas::make_ula(n_ports, aperture)
                                        : fas::make_upa(n_ports, aperture));
}

} // namespace

PYBIND11_MODULE(_fasperf, m) {
    m.doc() = "Outage probability and ergodic rate of a port-selection fluid "
              "antenna receiver under spatially correlated Rician fading";

    py::register_exception<fas::accuracy_error>(m, "AccuracyError",
                                                PyExc_ArithmeticError);
    py::register_exception<fas::validation_error>(m, "ValidationError",
                                                  PyExc_ValueError);
    py::register_exception<fas::layout_error>(m, "LayoutError",
                                              PyExc_ValueError);
    py::register_exception<fas::capacity_error>(m, "CapacityError",
                                                PyExc_ValueError);
    py::register_exception<fas::singularity_error>(m, "SingularityError",
                                                   PyExc_ValueError);

    // special functions
    m.def("bessel_j0", &fas::specfun::bessel_j0, "x"_a);
    m.def("bessel_i0_scaled", &fas::specfun::bessel_i0_scaled, "x"_a);
    m.def("reg_gamma_lower", &fas::specfun::reg_gamma_lower, "s"_a, "x"_a);
    m.def(
        "marcum_q",
        [](int order, double a, double b) {
            return fas::specfun::marcum_q(order, a, b);
        },
        "order"_a, "a"_a, "b"_a);
    m.def("exp_integral_ei", &fas::specfun::exp_integral_ei, "x"_a);
    m.def("gaussian_q_lower", &fas::specfun::gaussian_q_lower, "x"_a, "c"_a);

    // channel
    py::class_<fas::RicianSpec>(m, "RicianSpec")
        .def_readonly("kappa", &fas::RicianSpec::kappa)
        .def_readonly("amp_los", &fas::RicianSpec::amp_los)
        .def_readonly("sigma2", &fas::RicianSpec::sigma2);
    py::class_<fas::CorrelationProfile>(m, "CorrelationProfile")
        .def_property_readonly(
            "rho",
            [](const fas::CorrelationProfile &p) { return p.rho; })
        .def("num_ports", &fas::CorrelationProfile::num_ports);
    m.def("rician_from_kappa", &fas::rician_from_kappa, "kappa"_a);
    m.def("correlation_profile", &make_profile, "layout"_a, "n_ports"_a,
          "aperture"_a,
          "Jakes correlation profile for a 'ula' or 'upa' layout (n_ports=1 "
          "gives the degenerate single-port profile)");
    m.def(
        "ula_displacements",
        [](int n, double w) { return fas::ula_displacements(fas::make_ula(n, w)); },
        "n_ports"_a, "aperture"_a);
    m.def(
        "upa_distances",
        [](int n, double w) { return fas::upa_distances(fas::make_upa(n, w)); },
        "n_ports"_a, "aperture"_a);

    // analysis
    py::class_<fas::MetricResult>(m, "MetricResult")
        .def_readonly("value", &fas::MetricResult::value)
        .def_readonly("abs_error_estimate",
                      &fas::MetricResult::abs_error_estimate)
        .def_readonly("evaluations", &fas::MetricResult::evaluations)
        .def("__repr__", [](const fas::MetricResult &r) {
            return "MetricResult(value=" + std::to_string(r.value) +
                   ", abs_error_estimate=" +
                   std::to_string(r.abs_error_estimate) + ")";
        });

    auto cfg_with = [](double quad_tol, double bound_c) {
        fas::NumericsConfig cfg;
        cfg.quad_rel_tol = quad_tol;
        cfg.bound_c = bound_c;
        return cfg;
    };
    m.def(
        "op_exact",
        [cfg_with](double gamma_th, double kappa,
                   const fas::CorrelationProfile &corr, double quad_tol,
                   double bound_c) {
            return fas::op_exact(
                {gamma_th, fas::rician_from_kappa(kappa), corr},
                cfg_with(quad_tol, bound_c));
        },
        "gamma_th"_a, "kappa"_a, "corr"_a, "quad_tol"_a = 1e-9,
        "bound_c"_a = 1.1);
    m.def(
        "op_lower_bound",
        [](double gamma_th, double kappa, const fas::CorrelationProfile &corr) {
            return fas::op_lower_bound(
                {gamma_th, fas::rician_from_kappa(kappa), corr});
        },
        "gamma_th"_a, "kappa"_a, "corr"_a);
    m.def(
        "op_upper_bound",
        [cfg_with](double gamma_th, double kappa,
                   const fas::CorrelationProfile &corr, double bound_c) {
            return fas::op_upper_bound(
                {gamma_th, fas::rician_from_kappa(kappa), corr},
                cfg_with(1e-9, bound_c));
        },
        "gamma_th"_a, "kappa"_a, "corr"_a, "bound_c"_a = 1.1);
    m.def(
        "op_lower_series",
        [](double gamma_th, double kappa, const fas::CorrelationProfile &corr) {
            return fas::op_lower_series(
                {gamma_th, fas::rician_from_kappa(kappa), corr});
        },
        "gamma_th"_a, "kappa"_a, "corr"_a);
    m.def(
        "op_rayleigh_lower",
        [](double gamma_th, const fas::CorrelationProfile &corr) {
            return fas::op_rayleigh_lower(gamma_th, corr);
        },
        "gamma_th"_a, "corr"_a);
    m.def(
        "snr_cdf",
        [](double x, double kappa, const fas::CorrelationProfile &corr) {
            return fas::snr_cdf(x, fas::rician_from_kappa(kappa), corr);
        },
        "x"_a, "kappa"_a, "corr"_a);
    m.def(
        "er_exact",
        [](double kappa, const fas::CorrelationProfile &corr) {
            return fas::er_exact(fas::rician_from_kappa(kappa), corr);
        },
        "kappa"_a, "corr"_a);
    m.def(
        "er_lower_closed",
        [cfg_with](double kappa, const fas::CorrelationProfile &corr,
                   double bound_c) {
            return fas::er_lower_closed(fas::rician_from_kappa(kappa), corr,
                                        cfg_with(1e-9, bound_c));
        },
        "kappa"_a, "corr"_a, "bound_c"_a = 1.1);
    m.def(
        "er_upper",
        [](double kappa, const fas::CorrelationProfile &corr) {
            return fas::er_upper(fas::rician_from_kappa(kappa), corr);
        },
        "kappa"_a, "corr"_a);
    m.def("op_mrc",
          [](int branches, double kappa, double gamma_th) {
              return fas::op_mrc(branches, kappa, gamma_th);
          },
          "branches"_a, "kappa"_a, "gamma_th"_a);
    m.def(
        "slope_loglog",
        [](const std::vector<double> &xs, const std::vector<double> &ys) {
            return fas::slope_loglog(xs, ys);
        },
        "xs"_a, "ys"_a);

    // monte carlo
    py::class_<fas::EmpiricalEstimate>(m, "EmpiricalEstimate")
        .def_readonly("value", &fas::EmpiricalEstimate::value)
        .def_readonly("std_error", &fas::EmpiricalEstimate::std_error)
        .def_readonly("samples_used", &fas::EmpiricalEstimate::samples_used)
        .def("__repr__", [](const fas::EmpiricalEstimate &e) {
            return "EmpiricalEstimate(value=" + std::to_string(e.value) +
                   ", std_error=" + std::to_string(e.std_error) + ")";
        });
    auto sim_with = [](std::uint64_t samples, std::uint64_t seed) {
        fas::SimConfig sim;
        sim.num_samples = samples;
        sim.master_seed = seed;
        return sim;
    };
    m.def(
        "op_empirical",
        [sim_with](double gamma_th, double kappa,
                   const fas::CorrelationProfile &corr, std::uint64_t samples,
                   std::uint64_t seed) {
            return fas::op_empirical(
                {gamma_th, fas::rician_from_kappa(kappa), corr},
                sim_with(samples, seed));
        },
        "gamma_th"_a, "kappa"_a, "corr"_a, "samples"_a = 1000000,
        "seed"_a = 0);
    m.def(
        "er_empirical",
        [sim_with](double kappa, const fas::CorrelationProfile &corr,
                   std::uint64_t samples, std::uint64_t seed) {
            return fas::er_empirical(fas::rician_from_kappa(kappa), corr,
                                     sim_with(samples, seed));
        },
        "kappa"_a, "corr"_a, "samples"_a = 10000, "seed"_a = 0);
    m.def(
        "mrc_empirical",
        [sim_with](int branches, double kappa, double gamma_th,
                   std::uint64_t samples, std::uint64_t seed) {
            return fas::mrc_empirical(branches, kappa, gamma_th,
                                      sim_with(samples, seed));
        },
        "branches"_a, "kappa"_a, "gamma_th"_a, "samples"_a = 1000000,
        "seed"_a = 0);
    m.def(
        "sample_port_gains",
        [](double kappa, const fas::CorrelationProfile &corr,
           std::uint64_t seed, std::uint64_t draws) {
            fas::Rng rng(seed);
            const auto spec = fas::rician_from_kappa(kappa);
            std::vector<std::vector<double>> out;
            out.reserve(draws);
            for (std::uint64_t i = 0; i < draws; ++i)
                out.push_back(fas::sample_port_gains(spec, corr, rng));
            return out;
        },
        "kappa"_a, "corr"_a, "seed"_a = 0, "draws"_a = 1);

    // sweeps
    m.def(
        "run_sweep_json",
        [](const std::string &json_text) {
            const auto rows = fas::run_sweep(fas::sweep_from_json_text(json_text));
            py::list out;
            for (const auto &r : rows) {
                py::dict d;
                d["axis_value"] = r.axis_value;
                d["metric_value"] = r.metric_value;
                d["error_estimate"] = r.error_estimate;
                d["wall_time_ms"] = r.wall_time_ms;
                out.append(std::move(d));
            }
            return out;
        },
        "json_text"_a,
        "Run a sweep described by a JSON document; returns a list of row "
        "dicts");
    m.def("figure_names", &fas::figure_names);

#ifdef VERSION_INFO
#define FASPERF_STR2(x) #x
#define FASPERF_STR(x) FASPERF_STR2(x)
    m.attr("__version__") = FASPERF_STR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
