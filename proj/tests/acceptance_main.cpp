// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line
// with the measured numbers; run with no argument for the whole battery or
// with an index (1..12) for a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fasperf/analysis.hpp"
#include "fasperf/montecarlo.hpp"
#include "fasperf/sweep.hpp"
#include "oracles.hpp"

using namespace fas;

namespace {

int g_failures = 0;

void report(int idx, bool pass, const std::string &detail) {
    std::printf("criterion %2d: %s  %s\n", idx, pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass)
        ++g_failures;
}

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

CorrelationProfile ula(int n, double w) {
    return n == 1 ? CorrelationProfile::single_port()
                  : correlation_profile(make_ula(n, w));
}

OutageQuery q_ula(double gamma, double kappa, int n, double w) {
    return {gamma, rician_from_kappa(kappa), ula(n, w)};
}

// 1. Rayleigh closure: op_exact(N=1, kappa=0) = 1 - e^{-gamma} to 1e-10.
void criterion_1() {
    NumericsConfig tight;
    tight.quad_rel_tol = 1e-12;
    double worst = 0.0;
    for (double g : {0.1, 1.0, 10.0}) {
        const double v = op_exact(q_ula(g, 0.0, 1, 1.0), tight).value;
        worst = std::max(worst, std::abs(v - (1.0 - std::exp(-g))));
    }
    report(1, worst < 1e-10, fmt("max |op_exact - (1-e^-g)| = %.3g", worst));
}

// 2. Figure anchor A: ULA N=10, W=2, kappa=0, gamma=10^0.2 in [0.15, 0.25]
//    and Monte Carlo agreement within 3 stderr at 1e6 samples.
void criterion_2() {
    const auto q = q_ula(std::pow(10.0, 0.2), 0.0, 10, 2.0);
    const double exact = op_exact(q).value;
    SimConfig sim;
    sim.num_samples = 1000000;
    sim.master_seed = 2024;
    const auto mc = op_empirical(q, sim);
    const bool window = exact >= 0.15 && exact <= 0.25;
    const bool agree = std::abs(mc.value - exact) <= 3.0 * mc.std_error;
    report(2, window && agree,
           fmt("op_exact = %.6f (window [0.15,0.25] %s), |mc-exact| = %.2g "
               "vs 3se = %.2g (%s)",
               exact, window ? "ok" : "MISSED", std::abs(mc.value - exact),
               3.0 * mc.std_error, agree ? "ok" : "MISSED"));
}

// 3. Figure anchor B: ULA N=50, W=5, kappa=0, gamma=10^0.2 within
//    [1e-6, 1e-4].
void criterion_3() {
    const double v = op_exact(q_ula(std::pow(10.0, 0.2), 0.0, 50, 5.0)).value;
    report(3, v >= 1e-6 && v <= 1e-4, fmt("op_exact = %.4g", v));
}

// 4. Sandwich suite over kappa x N x gamma at W=2.
void criterion_4() {
    int bad = 0;
    double worst_violation = 0.0;
    for (double kappa : {0.0, 1.0, 10.0})
        for (int n : {2, 5, 10})
            for (double g : {std::pow(10.0, -0.5), 1.0, std::pow(10.0, 0.3)}) {
                const auto q = q_ula(g, kappa, n, 2.0);
                const double lo = op_lower_bound(q);
                const double e = op_exact(q).value;
                const double up = op_upper_bound(q);
                if (!(lo <= e + 1e-8) || !(e <= up + 1e-8)) {
                    ++bad;
                    worst_violation = std::max(
                        {worst_violation, lo - e, e - up});
                }
            }
    report(4, bad == 0,
           fmt("27-point grid, violations = %d (worst %.3g)", bad,
               worst_violation));
}

// 5. Monte Carlo agreement on the same grid, 1e6 samples, 3 stderr.
void criterion_5() {
    int bad = 0;
    double worst_sigma = 0.0;
    SimConfig sim;
    sim.num_samples = 1000000;
    int point = 0;
    for (double kappa : {0.0, 1.0, 10.0})
        for (int n : {2, 5, 10})
            for (double g : {std::pow(10.0, -0.5), 1.0, std::pow(10.0, 0.3)}) {
                const auto q = q_ula(g, kappa, n, 2.0);
                sim.master_seed = 500 + point++;
                const auto mc = op_empirical(q, sim);
                const double e = op_exact(q).value;
                // zero-count draws have zero plug-in stderr; fall back to
                // the rule-of-three binomial bound 3/M there
                const double guard = std::max(
                    3.0 * mc.std_error,
                    3.0 / static_cast<double>(sim.num_samples));
                const double se = std::max(mc.std_error, 1e-12);
                worst_sigma = std::max(worst_sigma,
                                       std::abs(mc.value - e) / se);
                if (std::abs(mc.value - e) > guard)
                    ++bad;
            }
    report(5, bad == 0,
           fmt("27 points, misses = %d, worst deviation = %.2f sigma", bad,
               worst_sigma));
}

// 6. MRC crossover windows at W=2, gamma=10^0.2.
void criterion_6() {
    const double g = std::pow(10.0, 0.2);
    auto crossover = [&](int branches, double kappa) -> int {
        const double mrc = op_mrc(branches, kappa, g);
        for (int n = 2; n <= 120; ++n)
            if (op_exact(q_ula(g, kappa, n, 2.0)).value < mrc)
                return n;
        return -1;
    };
    std::string detail;
    bool l5_ok = false, l8_ok = false;
    for (double kappa : {0.0, 1.0, 10.0}) {
        const int c5 = crossover(5, kappa);
        const int c8 = crossover(8, kappa);
        l5_ok = l5_ok || (c5 >= 20 && c5 <= 45);
        l8_ok = l8_ok || (c8 >= 50 && c8 <= 90);
        detail += fmt("k=%g: L5@%d L8@%d  ", kappa, c5, c8);
    }
    report(6, l5_ok && l8_ok,
           detail + fmt("(L5 window [20,45] %s, L8 window [50,90] %s)",
                        l5_ok ? "ok" : "MISSED", l8_ok ? "ok" : "MISSED"));
}

// 7. Diversity order: log-log slope of the exact outage against 1/gamma
//    equals -N within 15% for N in {2, 3} at kappa=0, W=2.
//
// The slope is fitted on op_exact, the quantity whose high-SNR decay
// defines the diversity order.  The closed-form upper bound cannot carry
// this signature: its per-port factors tend to the constants 1 - alpha_n
// as gamma -> 0, so its slope is -1 for every N (measured below and
// reported for transparency).
void criterion_7() {
    const std::vector<double> gammas{1e-3, std::pow(10.0, -2.5), 1e-2};
    std::string detail;
    bool ok = true;
    for (int n : {2, 3}) {
        std::vector<double> inv_g, p_exact, p_upper;
        for (double g : gammas) {
            p_exact.push_back(op_exact(q_ula(g, 0.0, n, 2.0)).value);
            p_upper.push_back(op_upper_bound(q_ula(g, 0.0, n, 2.0)));
        }
        for (auto it = gammas.rbegin(); it != gammas.rend(); ++it)
            inv_g.push_back(1.0 / *it);
        std::vector<double> pe_rev(p_exact.rbegin(), p_exact.rend());
        std::vector<double> pu_rev(p_upper.rbegin(), p_upper.rend());
        const double slope = slope_loglog(inv_g, pe_rev);
        const double slope_bound = slope_loglog(inv_g, pu_rev);
        const bool within = std::abs(slope - (-n)) <= 0.15 * n;
        ok = ok && within;
        detail += fmt("N=%d: slope %.3f (bound-form slope %.3f)  ", n, slope,
                      slope_bound);
    }
    report(7, ok, detail + "target -N within 15%");
}

// 8. Large-kappa saturation: slope of log op_exact vs log kappa over
//    {10, 30, 100} at N=5, W=2, gamma=10^0.3 has magnitude < 0.1.
//
// The saturation regime needs gamma above the LoS power concentration
// point (outage tending to one); below it the outage collapses to zero at
// large kappa and the slope diverges instead.
void criterion_8() {
    const double g = std::pow(10.0, 0.3);
    const std::vector<double> kappas{10.0, 30.0, 100.0};
    std::vector<double> ps;
    for (double k : kappas)
        ps.push_back(op_exact(q_ula(g, k, 5, 2.0)).value);
    const double slope = slope_loglog(kappas, ps);
    report(8, std::abs(slope) < 0.1,
           fmt("slope = %.4f at gamma=10^0.3 (op = %.3f / %.3f / %.3f)",
               slope, ps[0], ps[1], ps[2]));
}

// 9. UPA vs ULA: outage at N in {16,64}, kappa in {0,1}, gamma=1; and
//    empirical rate at N=64, kappa=0 within combined 3 stderr.
void criterion_9() {
    bool ok = true;
    std::string detail;
    for (int n : {16, 64})
        for (double kappa : {0.0, 1.0}) {
            const double pu =
                op_exact({1.0, rician_from_kappa(kappa),
                          correlation_profile(make_upa(n, 2.0))})
                    .value;
            const double pl = op_exact(q_ula(1.0, kappa, n, 2.0)).value;
            if (!(pu <= pl + 1e-8))
                ok = false;
            detail += fmt("N=%d k=%g: upa %.3g vs ula %.3g  ", n, kappa, pu,
                          pl);
        }
    SimConfig sim;
    sim.num_samples = 10000;
    sim.master_seed = 99;
    const auto eu = er_empirical(rician_from_kappa(0.0),
                                 correlation_profile(make_upa(64, 2.0)), sim);
    sim.master_seed = 100;
    const auto el = er_empirical(rician_from_kappa(0.0),
                                 correlation_profile(make_ula(64, 2.0)), sim);
    const double guard =
        3.0 * std::sqrt(eu.std_error * eu.std_error +
                        el.std_error * el.std_error);
    const bool er_ok = eu.value >= el.value - guard;
    ok = ok && er_ok;
    report(9, ok,
           detail + fmt("er: upa %.4f vs ula %.4f (slack %.4f, %s)", eu.value,
                        el.value, guard, er_ok ? "ok" : "MISSED"));
}

// 10. Rate anchor: er_exact(N=1, kappa=0) = e E1(1) / ln 2 within 1e-6.
void criterion_10() {
    const double ref =
        std::exp(1.0) * oracle::e1_integral(1.0) / std::log(2.0);
    const double v =
        er_exact(rician_from_kappa(0.0), CorrelationProfile::single_port())
            .value;
    report(10, std::abs(v - ref) < 1e-6,
           fmt("er = %.9f vs quadrature %.9f (diff %.2g)", v, ref,
               std::abs(v - ref)));
}

// 11. Rate bound ordering: er_lower_closed <= er_mc + 3se <= er_upper + 3se
//     at N in {2,4}, kappa in {0,1}, W=2.
void criterion_11() {
    bool ok = true;
    std::string detail;
    SimConfig sim;
    sim.num_samples = 10000;
    int seed = 1100;
    for (int n : {2, 4})
        for (double kappa : {0.0, 1.0}) {
            const auto corr = ula(n, 2.0);
            const auto rician = rician_from_kappa(kappa);
            sim.master_seed = seed++;
            const auto mc = er_empirical(rician, corr, sim);
            const double lo = er_lower_closed(rician, corr);
            const double up = er_upper(rician, corr).value;
            const double slack = 3.0 * mc.std_error;
            const bool point_ok =
                lo <= mc.value + slack && mc.value <= up + slack;
            ok = ok && point_ok;
            detail += fmt("N=%d k=%g: %.3f <= %.3f <= %.3f %s  ", n, kappa,
                          lo, mc.value, up, point_ok ? "" : "MISSED");
        }
    report(11, ok, detail);
}

// 12. Special-function oracle battery.
void criterion_12() {
    std::mt19937_64 gen(1234);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    double worst_q = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int order = 1 + i % 8;
        const double a = u(gen), b = u(gen);
        const double mine = specfun::marcum_q(order, a, b);
        const double ref = oracle::marcum_q_integral(order, a, b);
        worst_q = std::max(worst_q, std::abs(mine - ref));
    }

    double worst_j0 = 0.0;
    for (double x = 0.0; x <= 12.0; x += 0.1)
        worst_j0 = std::max(worst_j0,
                            std::abs(specfun::bessel_j0(x) -
                                     oracle::j0_series(x)));
    double worst_i0 = 0.0;
    for (double x = 0.0; x <= 30.0; x += 0.25)
        worst_i0 = std::max(
            worst_i0, std::abs(specfun::bessel_i0_scaled(x) -
                               oracle::i0_scaled_series(x)) /
                          oracle::i0_scaled_series(x));
    double worst_ei = 0.0;
    for (double x = 0.01; x <= 20.0; x += 0.23)
        worst_ei = std::max(worst_ei,
                            std::abs(specfun::exp_integral_ei(-x) +
                                     oracle::e1_integral(x)));

    const bool ok = worst_q < 1e-9 && worst_j0 < 1e-12 && worst_i0 < 1e-12 &&
                    worst_ei < 1e-10;
    report(12, ok,
           fmt("marcum %.2g (<1e-9), j0 %.2g (<1e-12), i0 %.2g rel (<1e-12), "
               "ei %.2g (<1e-10)",
               worst_q, worst_j0, worst_i0, worst_ei));
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<std::function<void()>> criteria{
        criterion_1, criterion_2, criterion_3, criterion_4,
        criterion_5, criterion_6, criterion_7, criterion_8,
        criterion_9, criterion_10, criterion_11, criterion_12};

    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);

    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && only != static_cast<int>(i + 1))
            continue;
        criteria[i]();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("acceptance: %s (%d failure%s, %.1f s)\n",
                g_failures == 0 ? "PASS" : "FAIL", g_failures,
                g_failures == 1 ? "" : "s", secs);
    return g_failures == 0 ? 0 : 1;
}
