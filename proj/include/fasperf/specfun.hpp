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

namespace fas::specfun {

/// Truncation control for the Marcum Q series and related expansions.
struct SeriesControl {
    int max_terms = 10000;
    double rel_tol = 1e-12;
};

/// Bessel function of the first kind, order zero.  |result| <= 1.
/// Throws std::domain_error for non-finite input.
double bessel_j0(double x);

/// Exponentially scaled modified Bessel function: e^{-x} I0(x), x >= 0.
/// Result lies in (0, 1] and decreases monotonically.  The scaled form is
/// what the outage integrand consumes; together with log-space assembly it
/// keeps the Rician kernel finite for kappa up to 1e4.
double bessel_i0_scaled(double x);

/// Regularized lower incomplete gamma P(s, x) = gamma(s,x)/Gamma(s),
/// s > 0, x >= 0.  Monotone increasing in x, result in [0, 1].
double reg_gamma_lower(double s, double x);

/// Generalized Marcum Q-function Q_v(a, b) for integer order v >= 1.
///
/// Evaluated through the canonical series
///   Q_v(a,b) = 1 - e^{-a^2/2} sum_k (a^2/2)^k / k! * P(v+k, b^2/2),
/// truncated once the Poisson-weight tail bound falls below ctrl.rel_tol.
/// Nonincreasing in b, nondecreasing in a and v.  Throws accuracy_error when
/// ctrl.max_terms is exhausted before the tail bound is met.
double marcum_q(int order, double a, double b, const SeriesControl &ctrl = {});

/// Exponential integral Ei(x), x != 0 (Cauchy principal value for x > 0).
/// For x < 0, Ei(x) = -E1(-x) < 0.
double exp_integral_ei(double x);

/// Exponentially scaled variant e^{x} E1(x) = -e^{x} Ei(-x) for x > 0.
/// Stays finite where e^{x} alone would overflow; used by the closed-form
/// rate bound whose exponents grow with the port count.
double exp_e1_scaled(double x);

/// Exponential-family lower bound of the Gaussian Q-function,
///   alpha(c) e^{-c x^2 / 2},  c > 1, x >= 0,
/// with alpha(c) = e^{1/(pi(c-1)+2)} / (2c) * sqrt((c-1)(pi(c-1)+2)/pi).
/// The result never exceeds Q(x) = erfc(x/sqrt(2))/2.
double gaussian_q_lower(double x, double c);

/// alpha(c) prefactor of gaussian_q_lower, exposed for the outage bounds.
double gaussian_q_lower_alpha(double c);

} // namespace fas::specfun
