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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "fasperf/errors.hpp"

namespace fas {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (symmetric half).
inline constexpr double gk15_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk15_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss-7 weights aligned with the odd Kronrod nodes.
inline constexpr double gk15_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15_apply(F &f, double a, double b, double &integral, double &err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * gk15_nodes[i]);
        fv[14 - i] = f(c + h * gk15_nodes[i]);
    }
    fv[7] = f(c);
    double kron = gk15_wk[7] * fv[7];
    double gauss = gk15_wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += gk15_wk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += gk15_wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    integral = kron * h;
    err = std::abs(kron - gauss) * h;
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod 15(7) integration on a finite interval.
/// Bisects the segment with the largest embedded error estimate until the
/// total estimate satisfies  sum_err <= max(abs_tol, rel_tol * |integral|),
/// or throws accuracy_error after max_subdiv bisections.
template <class F>
QuadResult integrate_adaptive(F &&f, double a, double b, double rel_tol,
                              int max_subdiv, double abs_tol = 0.0) {
    QuadResult out;
    if (a == b)
        return out;

    struct Segment {
        double a, b, integral, err;
    };
    std::vector<Segment> segs;
    segs.reserve(64);
    double i0, e0;
    detail::gk15_apply(f, a, b, i0, e0);
    out.evaluations = 15;
    segs.push_back({a, b, i0, e0});

    double total = i0;
    double total_err = e0;
    for (int iter = 0; iter < max_subdiv; ++iter) {
        if (total_err <= std::max(abs_tol, rel_tol * std::abs(total)))
            break;
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err)
                worst = i;
        Segment seg = segs[worst];
        const double mid = 0.5 * (seg.a + seg.b);
        if (mid <= seg.a || mid >= seg.b)
            break; // interval exhausted at machine precision
        Segment left{seg.a, mid, 0, 0}, right{mid, seg.b, 0, 0};
        detail::gk15_apply(f, left.a, left.b, left.integral, left.err);
        detail::gk15_apply(f, right.a, right.b, right.integral, right.err);
        out.evaluations += 30;
        total += left.integral + right.integral - seg.integral;
        total_err += left.err + right.err - seg.err;
        segs[worst] = left;
        segs.push_back(right);
    }
    if (total_err > std::max(abs_tol, rel_tol * std::abs(total)))
        throw accuracy_error("adaptive quadrature did not reach tolerance",
                             total_err);
    out.value = total;
    out.abs_error = total_err;
    return out;
}

} // namespace fas
