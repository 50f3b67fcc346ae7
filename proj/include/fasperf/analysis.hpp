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

#include <span>

#include "fasperf/channel.hpp"
#include "fasperf/specfun.hpp"

namespace fas {

/// One outage-probability evaluation point.  gamma_th is the LINEAR
/// threshold on the normalized SNR (dB conversion lives in the CLI only).
struct OutageQuery {
    double gamma_th;
    RicianSpec rician;
    CorrelationProfile corr;
};

/// Numerical knobs shared by the analytical metrics.
struct NumericsConfig {
    double quad_rel_tol = 1e-9;
    int quad_max_subdiv = 4000;
    /// Rate integrals truncate at the first U (doubling from 8) where the
    /// channel CDF satisfies 1 - F(U) < er_tail_eps.
    double er_tail_eps = 1e-8;
    /// Hard cap on that truncation point; exceeding it raises accuracy_error.
    double er_upper_limit = 65536.0;
    /// Constant c > 1 of the exponential Gaussian-Q lower bound that drives
    /// the closed-form outage upper bound.
    double bound_c = 1.1;
    specfun::SeriesControl series{};
};

struct MetricResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// Diagnostics for the closed-form bounds: whether a degenerate (rho = 0)
/// port factor was replaced by 1, and whether the raw value left [0, 1] by
/// more than 1e-12 before clamping.
struct BoundDiagnostics {
    bool degenerate_port = false;
    bool clamped = false;
    double raw_value = 0.0;
};

/// Outage probability of the best-port selection receiver: the probability
/// that every port's normalized channel power lies below gamma_th.
///
/// Evaluates the single integral over the reference-port power t in
/// [0, gamma_th] whose kernel is the Rician density times the product of the
/// conditional per-port CDFs, each a 1 - Q1(...) factor.  The kernel's
/// density part is assembled in log space so that large Rician factors never
/// overflow.  Requires |rho_n| < 1 for n >= 2 (singularity_error otherwise).
MetricResult op_exact(const OutageQuery &q, const NumericsConfig &cfg = {});

/// Closed-form lower bound: the same per-port product with the conditioning
/// variable frozen at gamma_th.  Tight at N = 1.
double op_lower_bound(const OutageQuery &q,
                      const specfun::SeriesControl &ctrl = {});

/// Closed-form upper bound built from the exponential Gaussian-Q lower
/// bound (constant cfg.bound_c).  Ports with rho_n = 0 have their factor
/// replaced by 1 (still a valid bound) and are flagged in `diag`.
/// The result is clamped to [0, 1].
double op_upper_bound(const OutageQuery &q, const NumericsConfig &cfg = {},
                      BoundDiagnostics *diag = nullptr);

/// Series route to the same lower bound: product over all ports of
/// e^{-a_n^2/2} sum_k (a_n^2/2)^k / k! * P(1+k, b_n^2/2), with the reference
/// port entering through rho_1 = 0.  Agrees with op_lower_bound to series
/// tolerance.
double op_lower_series(const OutageQuery &q,
                       const specfun::SeriesControl &ctrl = {});

/// Rayleigh (kappa = 0) specialization of the lower bound.
double op_rayleigh_lower(double gamma_th, const CorrelationProfile &corr,
                         const specfun::SeriesControl &ctrl = {});

/// CDF of the selected-port SNR; identical kernel to op_exact with the
/// threshold as the argument.
double snr_cdf(double x, const RicianSpec &rician,
               const CorrelationProfile &corr, const NumericsConfig &cfg = {});

/// Ergodic rate in bits/s/Hz:  (1/ln 2) * Int_0^U (1 - F(x))/(1 + x) dx,
/// truncated per cfg with the tail contribution recorded in the error
/// estimate.  `evaluations` counts outer integrand evaluations (each one is
/// a full CDF quadrature).
MetricResult er_exact(const RicianSpec &rician, const CorrelationProfile &corr,
                      const NumericsConfig &cfg = {});

/// Closed-form rate lower bound: inclusion-exclusion expansion of a
/// separable surrogate CDF, one exponential factor per port, integrated
/// term by term via  Int_0^inf e^{-mu x}/(1+x) dx = e^{mu} E1(mu).
///
/// The expansion runs over all nonempty port subsets; the reference port
/// contributes the factor (1 - e^{-x}).  Ports with rho = 0 are skipped
/// (their surrogate factor is 1, which keeps the bound valid).  Requires
/// N <= 20 (capacity_error beyond that; use er_exact instead).
double er_lower_closed(const RicianSpec &rician,
                       const CorrelationProfile &corr,
                       const NumericsConfig &cfg = {});

/// Rate upper bound: the ergodic-rate integral evaluated on the closed-form
/// outage lower bound instead of the exact CDF.
MetricResult er_upper(const RicianSpec &rician, const CorrelationProfile &corr,
                      const NumericsConfig &cfg = {});

/// Outage probability of L-branch maximum ratio combining under i.i.d.
/// Rician branches:  1 - Q_L(sqrt(2 L kappa), sqrt(2 (kappa+1) gamma_th)).
double op_mrc(int branches, double kappa, double gamma_th,
              const specfun::SeriesControl &ctrl = {});

/// Least-squares slope of log(y) against log(x); the numerical estimator
/// behind diversity-order and large-kappa slope readings.  Requires at
/// least two points, xs strictly increasing, all values positive.
double slope_loglog(std::span<const double> xs, std::span<const double> ys);

} // namespace fas
