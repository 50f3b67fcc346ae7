// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fasperf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include "fasperf/errors.hpp"

namespace fas::specfun {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

void require_finite(double x, const char *who) {
    if (!std::isfinite(x))
        throw std::domain_error(std::string(who) + ": non-finite argument");
}

const int gsl_handler_disabled = [] {
    gsl_set_error_handler_off();
    return 0;
}();

} // namespace

double bessel_j0(double x) {
    require_finite(x, "bessel_j0");
    return gsl_sf_bessel_J0(x);
}

double bessel_i0_scaled(double x) {
    require_finite(x, "bessel_i0_scaled");
    if (x < 0.0)
        throw std::domain_error("bessel_i0_scaled: negative argument");
    if (x < 50.0) {
        // Power series; all terms positive, no cancellation.
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        return sum * std::exp(-x);
    }
    // Asymptotic expansion of e^{-x} I0(x); terms shrink well past double
    // precision for x >= 50.
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 20; ++k) {
        const double num = (2.0 * k + 1.0) * (2.0 * k + 1.0);
        const double next = term * num / (8.0 * (k + 1.0) * x);
        if (next >= term)
            break;
        term = next;
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum / std::sqrt(2.0 * pi * x);
}

double reg_gamma_lower(double s, double x) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::domain_error("reg_gamma_lower: s must be positive");
    if (x < 0.0 || !std::isfinite(x))
        throw std::domain_error("reg_gamma_lower: x must be nonnegative");
    if (x == 0.0)
        return 0.0;

    const double log_prefix = s * std::log(x) - x - std::lgamma(s);
    if (x < s + 1.0) {
        // Lower series: P = x^s e^{-x} / Gamma(s) * sum_n x^n / rising(s, n+1)
        double ap = s;
        double term = 1.0 / s;
        double sum = term;
        for (int n = 0; n < 600; ++n) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16)
                return std::clamp(sum * std::exp(log_prefix), 0.0, 1.0);
        }
        throw accuracy_error("reg_gamma_lower: series did not converge",
                             std::abs(term));
    }
    // Upper tail via Lentz continued fraction, then P = 1 - Q.
    const double tiny = std::numeric_limits<double>::min() * 1e4;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 600; ++i) {
        const double an = -static_cast<double>(i) * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            const double q = std::exp(log_prefix) * h;
            return std::clamp(1.0 - q, 0.0, 1.0);
        }
    }
    throw accuracy_error("reg_gamma_lower: continued fraction did not converge",
                         0.0);
}

double marcum_q(int order, double a, double b, const SeriesControl &ctrl) {
    if (order < 1)
        throw std::domain_error("marcum_q: order must be a positive integer");
    if (!(a >= 0.0) || !std::isfinite(a) || !(b >= 0.0) || !std::isfinite(b))
        throw std::domain_error("marcum_q: a, b must be finite and nonnegative");
    if (ctrl.max_terms < 1 || !(ctrl.rel_tol > 0.0) || !(ctrl.rel_tol < 1.0))
        throw std::domain_error("marcum_q: invalid series control");
    if (b == 0.0)
        return 1.0;

    const double lambda = 0.5 * a * a; // Poisson intensity of the mixture
    const double y = 0.5 * b * b;

    // Weights w_k = e^{-lambda} lambda^k / k! start at k0 = 0 when e^{-lambda}
    // is representable; otherwise the loop starts inside the weight bulk
    // (k0 ~ lambda) with the first weight computed in log space.  Mass below
    // k0 is then < 1e-16 and P <= 1 bounds its contribution.
    int k0 = 0;
    double w;
    if (lambda < 600.0) {
        w = std::exp(-lambda);
    } else {
        k0 = static_cast<int>(lambda - 8.5 * std::sqrt(lambda));
        if (k0 < 0)
            k0 = 0;
        w = std::exp(k0 * std::log(lambda) - lambda - std::lgamma(k0 + 1.0));
    }

    // P(order + k, y) via downward recurrence from P(order + k0, y):
    // P(s+1, y) = P(s, y) - y^s e^{-y} / Gamma(s+1).
    const double v0 = static_cast<double>(order) + k0;
    double p = reg_gamma_lower(v0, y);
    double d = std::exp(v0 * std::log(y) - y - std::lgamma(v0 + 1.0));

    double sum = 0.0;
    double cum_w = 0.0; // mass below k0 counts toward the tail bound
    bool converged = false;
    double tail_bound = 1.0;
    for (int k = k0; k < k0 + ctrl.max_terms; ++k) {
        sum += w * p;
        cum_w += w;
        // P decreases in k, so the unseen remainder is at most (1-cum_w) * p.
        tail_bound = std::max(0.0, 1.0 - cum_w) * p;
        if (tail_bound <= ctrl.rel_tol * std::max(sum, 1e-300) ||
            tail_bound <= 1e-300) {
            converged = true;
            break;
        }
        p = std::max(0.0, p - d);
        d *= y / (v0 + (k - k0) + 1.0);
        w *= lambda / (k + 1.0);
    }
    if (!converged)
        throw accuracy_error(
            "marcum_q: series cap reached before tolerance (remaining bound " +
                std::to_string(tail_bound) + ")",
            tail_bound);
    return std::clamp(1.0 - sum, 0.0, 1.0);
}

double exp_integral_ei(double x) {
    require_finite(x, "exp_integral_ei");
    if (x == 0.0)
        throw std::domain_error("exp_integral_ei: logarithmic singularity at 0");
    return std::expint(x);
}

double exp_e1_scaled(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("exp_e1_scaled: x must be positive");
    if (x <= 50.0)
        return std::exp(x) * (-std::expint(-x));
    // Lentz continued fraction for e^x E1(x); the exponential cancels
    // analytically, so this stays finite for arbitrarily large x.
    const double tiny = std::numeric_limits<double>::min() * 1e4;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 200; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return h;
}

double gaussian_q_lower_alpha(double c) {
    if (!(c > 1.0) || !std::isfinite(c))
        throw std::domain_error("gaussian_q_lower: c must exceed 1");
    const double t = pi * (c - 1.0) + 2.0;
    return std::exp(1.0 / t) / (2.0 * c) * std::sqrt((c - 1.0) * t / pi);
}

double gaussian_q_lower(double x, double c) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("gaussian_q_lower: x must be nonnegative");
    return gaussian_q_lower_alpha(c) * std::exp(-0.5 * c * x * x);
}

} // namespace fas::specfun
