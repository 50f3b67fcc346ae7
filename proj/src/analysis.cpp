// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fasperf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fasperf/errors.hpp"
#include "fasperf/quadrature.hpp"

namespace fas {

namespace {

constexpr double ln2 = 0.69314718055994530941723212145818;

void validate_query(double gamma_th, const RicianSpec &rician,
                    const CorrelationProfile &corr) {
    if (!(gamma_th > 0.0) || !std::isfinite(gamma_th))
        throw std::domain_error("gamma_th must be positive and finite");
    if (!(rician.kappa >= 0.0) || !std::isfinite(rician.kappa))
        throw std::domain_error("kappa must be nonnegative and finite");
    if (corr.rho.empty())
        throw validation_error("correlation profile has no ports");
    if (corr.rho[0] != 0.0)
        throw validation_error("reference-port correlation slot must be 0");
    for (std::size_t n = 1; n < corr.rho.size(); ++n)
        if (std::abs(corr.rho[n]) >= 1.0)
            throw singularity_error("|rho| = 1 makes the conditional variance "
                                    "vanish (port " +
                                    std::to_string(n + 1) + ")");
}

// Per-port constants of the conditional CDF factor
//   1 - Q1( sqrt(lin_t * t + 2*kappa), b ).
struct PortFactor {
    double lin_t; // 2 rho^2 (kappa+1) / (1 - rho^2)
    double b;     // sqrt(2 (1+kappa) gamma_th / (1 - rho^2))
};

std::vector<PortFactor> port_factors(double gamma_th, const RicianSpec &rician,
                                     const CorrelationProfile &corr) {
    const double k = rician.kappa;
    std::vector<PortFactor> ports;
    ports.reserve(corr.rho.size() > 0 ? corr.rho.size() - 1 : 0);
    for (std::size_t n = 1; n < corr.rho.size(); ++n) {
        const double r2 = corr.rho[n] * corr.rho[n];
        const double denom = 1.0 - r2;
        ports.push_back({2.0 * r2 * (k + 1.0) / denom,
                         std::sqrt(2.0 * (1.0 + k) * gamma_th / denom)});
    }
    return ports;
}

// Log of the reference-port power density (kappa+1) e^{-((kappa+1)t+kappa)}
// I0(2 sqrt(kappa(kappa+1)t)), assembled from the scaled Bessel so the
// exponentials cancel analytically.
double log_ref_density(double t, double kappa) {
    const double arg = 2.0 * std::sqrt(kappa * (kappa + 1.0) * t);
    return std::log1p(kappa) - ((kappa + 1.0) * t + kappa) + arg +
           std::log(specfun::bessel_i0_scaled(arg));
}

} // namespace

MetricResult op_exact(const OutageQuery &q, const NumericsConfig &cfg) {
    validate_query(q.gamma_th, q.rician, q.corr);
    const double kappa = q.rician.kappa;
    const auto ports = port_factors(q.gamma_th, q.rician, q.corr);

    auto integrand = [&](double t) {
        double prod = 1.0;
        for (const auto &p : ports) {
            const double a = std::sqrt(p.lin_t * t + 2.0 * kappa);
            prod *= 1.0 - specfun::marcum_q(1, a, p.b, cfg.series);
            if (prod == 0.0)
                return 0.0;
        }
        return std::exp(log_ref_density(t, kappa)) * prod;
    };

    QuadResult quad = integrate_adaptive(integrand, 0.0, q.gamma_th,
                                         cfg.quad_rel_tol, cfg.quad_max_subdiv);
    return {std::clamp(quad.value, 0.0, 1.0), quad.abs_error, quad.evaluations};
}

double op_lower_bound(const OutageQuery &q, const specfun::SeriesControl &ctrl) {
    validate_query(q.gamma_th, q.rician, q.corr);
    const double kappa = q.rician.kappa;
    double p = 1.0 - specfun::marcum_q(
                         1, std::sqrt(2.0 * kappa),
                         std::sqrt(2.0 * (1.0 + kappa) * q.gamma_th), ctrl);
    for (const auto &f : port_factors(q.gamma_th, q.rician, q.corr)) {
        const double a = std::sqrt(f.lin_t * q.gamma_th + 2.0 * kappa);
        p *= 1.0 - specfun::marcum_q(1, a, f.b, ctrl);
    }
    return std::clamp(p, 0.0, 1.0);
}

double op_upper_bound(const OutageQuery &q, const NumericsConfig &cfg,
                      BoundDiagnostics *diag) {
    validate_query(q.gamma_th, q.rician, q.corr);
    const double kappa = q.rician.kappa;
    const double c = cfg.bound_c;
    const double alpha = specfun::gaussian_q_lower_alpha(c);
    const double gamma_kappa =
        q.gamma_th * (kappa + 1.0) + kappa -
        2.0 * std::sqrt(q.gamma_th * kappa * (kappa + 1.0));
    const double g4 = std::pow(q.gamma_th * (1.0 + kappa), 0.25);

    BoundDiagnostics local;
    double p = 1.0 - specfun::marcum_q(
                         1, std::sqrt(2.0 * kappa),
                         std::sqrt(2.0 * (1.0 + kappa) * q.gamma_th),
                         cfg.series);
    for (std::size_t n = 1; n < q.corr.rho.size(); ++n) {
        const double rho = q.corr.rho[n];
        if (rho == 0.0) {
            // alpha_n is undefined at rho = 0; a unit factor keeps the
            // product a valid upper bound.
            local.degenerate_port = true;
            continue;
        }
        const double r2 = rho * rho;
        const double alpha_n =
            alpha * g4 /
            (std::sqrt(std::abs(rho)) * g4 +
             std::pow(kappa * (1.0 - r2), 0.25));
        p *= 1.0 - alpha_n * std::exp(-c * gamma_kappa / (1.0 - r2));
    }
    local.raw_value = p;
    local.clamped = (p < -1e-12) || (p > 1.0 + 1e-12);
    if (diag)
        *diag = local;
    return std::clamp(p, 0.0, 1.0);
}

double op_lower_series(const OutageQuery &q,
                       const specfun::SeriesControl &ctrl) {
    validate_query(q.gamma_th, q.rician, q.corr);
    const double kappa = q.rician.kappa;

    // Direct product of the per-port series
    //   e^{-a_n^2/2} sum_k (a_n^2/2)^k / k! P(1+k, b_n^2/2),
    // accumulated term by term; the reference port is the rho = 0 member.
    auto factor = [&](double a, double b) {
        const double lambda = 0.5 * a * a;
        const double y = 0.5 * b * b;
        if (y == 0.0)
            return 0.0;
        double w = std::exp(-lambda);
        double p = specfun::reg_gamma_lower(1.0, y);
        double d = std::exp(std::log(y) - y); // y^1 e^{-y} / Gamma(2)
        double sum = 0.0, cum_w = 0.0;
        for (int k = 0; k < ctrl.max_terms; ++k) {
            sum += w * p;
            cum_w += w;
            if ((1.0 - cum_w) * p <= ctrl.rel_tol * std::max(sum, 1e-300))
                return sum;
            p = std::max(0.0, p - d);
            d *= y / (k + 2.0);
            w *= lambda / (k + 1.0);
        }
        throw accuracy_error("op_lower_series: truncation cap reached",
                             (1.0 - cum_w) * p);
    };

    double prod = factor(std::sqrt(2.0 * kappa),
                         std::sqrt(2.0 * (1.0 + kappa) * q.gamma_th));
    for (const auto &f : port_factors(q.gamma_th, q.rician, q.corr)) {
        const double a = std::sqrt(f.lin_t * q.gamma_th + 2.0 * kappa);
        prod *= factor(a, f.b);
    }
    return std::clamp(prod, 0.0, 1.0);
}

double op_rayleigh_lower(double gamma_th, const CorrelationProfile &corr,
                         const specfun::SeriesControl &ctrl) {
    OutageQuery q{gamma_th, rician_from_kappa(0.0), corr};
    validate_query(q.gamma_th, q.rician, q.corr);
    double p = 1.0 - std::exp(-gamma_th);
    for (const auto &f : port_factors(gamma_th, q.rician, corr)) {
        const double a = std::sqrt(f.lin_t * gamma_th);
        p *= 1.0 - specfun::marcum_q(1, a, f.b, ctrl);
    }
    return std::clamp(p, 0.0, 1.0);
}

double snr_cdf(double x, const RicianSpec &rician,
               const CorrelationProfile &corr, const NumericsConfig &cfg) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("snr_cdf: x must be positive");
    return op_exact({x, rician, corr}, cfg).value;
}

namespace {

// Doubling search for the rate-integral truncation point: smallest U in
// {8, 16, ...} with 1 - F(U) < cfg.er_tail_eps.
template <class Cdf>
double find_tail_cut(Cdf &&cdf, const NumericsConfig &cfg, double &tail_mass) {
    double u = 8.0;
    while (true) {
        tail_mass = 1.0 - cdf(u);
        if (tail_mass < cfg.er_tail_eps)
            return u;
        if (u >= cfg.er_upper_limit)
            throw accuracy_error(
                "rate integral: tail bound not achievable within the "
                "truncation cap",
                tail_mass);
        u *= 2.0;
    }
}

} // namespace

MetricResult er_exact(const RicianSpec &rician, const CorrelationProfile &corr,
                      const NumericsConfig &cfg) {
    // The inner CDF quadrature runs two digits tighter than the outer rate
    // integral, so inner noise never dominates the outer error estimate.
    NumericsConfig inner = cfg;
    inner.quad_rel_tol = cfg.quad_rel_tol * 1e-2;

    double tail_mass = 0.0;
    const double u = find_tail_cut(
        [&](double x) { return snr_cdf(x, rician, corr, inner); }, cfg,
        tail_mass);

    long outer_evals = 0;
    auto integrand = [&](double x) {
        ++outer_evals;
        if (x <= 0.0)
            return 1.0; // 1 - F(0+) = 1
        return (1.0 - snr_cdf(x, rician, corr, inner)) / (1.0 + x);
    };
    QuadResult quad = integrate_adaptive(integrand, 0.0, u, cfg.quad_rel_tol,
                                         cfg.quad_max_subdiv);
    // Tail: on [U, 10U] bound 1 - F by its value at U; past 10U the decay is
    // at least exponential and contributes below that estimate.
    const double tail = tail_mass * std::log((1.0 + 10.0 * u) / (1.0 + u));
    return {quad.value / ln2, (quad.abs_error + tail) / ln2, outer_evals};
}

double er_lower_closed(const RicianSpec &rician, const CorrelationProfile &corr,
                       const NumericsConfig &cfg) {
    OutageQuery probe{1.0, rician, corr};
    validate_query(probe.gamma_th, rician, corr);
    const int n_total = static_cast<int>(corr.rho.size());
    if (n_total > 20)
        throw capacity_error("er_lower_closed: subset expansion above 20 ports "
                             "is intractable; use er_exact");

    const double c = cfg.bound_c;
    const double alpha = specfun::gaussian_q_lower_alpha(c);
    const double kappa = rician.kappa;

    // Surrogate CDF factors (1 - coef_i e^{-rate_i x}): the reference port
    // contributes (1 - e^{-x}); every other port an exponential built from
    // the Gaussian-Q bound constant.  rho = 0 ports are skipped (factor 1).
    std::vector<double> coef{1.0}, rate{1.0};
    for (int n = 1; n < n_total; ++n) {
        const double rho = corr.rho[n];
        if (rho == 0.0)
            continue;
        coef.push_back(alpha * std::exp(-kappa) / std::sqrt(std::abs(rho)));
        rate.push_back(c * (kappa + 1.0) / (1.0 - rho * rho));
    }

    // Inclusion-exclusion over all nonempty subsets; each exponential term
    // integrates to e^{mu} E1(mu) against 1/(1+x).
    const int m = static_cast<int>(coef.size());
    double total = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        double prod = 1.0, mu = 0.0;
        int bits = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                prod *= coef[i];
                mu += rate[i];
                ++bits;
            }
        const double sign = (bits % 2 == 1) ? 1.0 : -1.0;
        total += sign * prod * specfun::exp_e1_scaled(mu);
    }
    return total / ln2;
}

MetricResult er_upper(const RicianSpec &rician, const CorrelationProfile &corr,
                      const NumericsConfig &cfg) {
    auto lower_cdf = [&](double x) {
        return op_lower_bound({x, rician, corr}, cfg.series);
    };
    double tail_mass = 0.0;
    const double u = find_tail_cut(lower_cdf, cfg, tail_mass);

    long evals = 0;
    auto integrand = [&](double x) {
        ++evals;
        if (x <= 0.0)
            return 1.0;
        return (1.0 - lower_cdf(x)) / (1.0 + x);
    };
    QuadResult quad = integrate_adaptive(integrand, 0.0, u, cfg.quad_rel_tol,
                                         cfg.quad_max_subdiv);
    const double tail = tail_mass * std::log((1.0 + 10.0 * u) / (1.0 + u));
    return {quad.value / ln2, (quad.abs_error + tail) / ln2, evals};
}

double op_mrc(int branches, double kappa, double gamma_th,
              const specfun::SeriesControl &ctrl) {
    if (branches < 1)
        throw std::domain_error("op_mrc: branch count must be >= 1");
    if (!(kappa >= 0.0) || !(gamma_th > 0.0))
        throw std::domain_error("op_mrc: kappa >= 0 and gamma_th > 0 required");
    return 1.0 - specfun::marcum_q(
                     branches, std::sqrt(2.0 * branches * kappa),
                     std::sqrt(2.0 * (kappa + 1.0) * gamma_th), ctrl);
}

double slope_loglog(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::domain_error("slope_loglog: need matching vectors with at "
                                "least two points");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw std::domain_error("slope_loglog: all values must be positive");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw std::domain_error("slope_loglog: xs must be strictly "
                                    "increasing");
    }
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

} // namespace fas
