// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fasperf/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fasperf/errors.hpp"
#include "fasperf/specfun.hpp"

namespace fas {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

int isqrt_exact(int n) {
    const int r = static_cast<int>(std::llround(std::sqrt(double(n))));
    return (r * r == n) ? r : -1;
}

void check_aperture(const PortLayout &layout) {
    if (!(layout.aperture > 0.0) || !std::isfinite(layout.aperture))
        throw layout_error("aperture must be a positive span in wavelengths");
}

} // namespace

PortLayout make_ula(int num_ports, double aperture) {
    PortLayout layout{LayoutKind::ula, num_ports, aperture};
    check_aperture(layout);
    if (num_ports < 2)
        throw layout_error("ULA needs at least 2 ports");
    return layout;
}

PortLayout make_upa(int num_ports, double aperture) {
    PortLayout layout{LayoutKind::upa, num_ports, aperture};
    check_aperture(layout);
    if (num_ports < 4 || isqrt_exact(num_ports) < 2)
        throw layout_error("UPA needs a perfect-square port count >= 4, got " +
                           std::to_string(num_ports));
    return layout;
}

CorrelationProfile CorrelationProfile::single_port() {
    return CorrelationProfile{{0.0}, PortLayout{LayoutKind::ula, 1, 0.0}};
}

std::vector<double> ula_displacements(const PortLayout &layout) {
    if (layout.kind != LayoutKind::ula)
        throw layout_error("ula_displacements: layout is not a ULA");
    check_aperture(layout);
    const int n = layout.num_ports;
    if (n < 2)
        throw layout_error("ula_displacements: ULA needs at least 2 ports");
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = (static_cast<double>(i) / (n - 1)) * layout.aperture;
    return d;
}

std::vector<double> upa_distances(const PortLayout &layout) {
    if (layout.kind != LayoutKind::upa)
        throw layout_error("upa_distances: layout is not a UPA");
    check_aperture(layout);
    const int side = isqrt_exact(layout.num_ports);
    if (side < 2)
        throw layout_error("upa_distances: port count must be a perfect square "
                           ">= 4, got " +
                           std::to_string(layout.num_ports));
    std::vector<double> d;
    d.reserve(layout.num_ports);
    for (int r = 0; r < side; ++r) {
        const double dr = (static_cast<double>(r) / (side - 1)) * layout.aperture;
        for (int c = 0; c < side; ++c) {
            const double dc =
                (static_cast<double>(c) / (side - 1)) * layout.aperture;
            d.push_back(std::hypot(dr, dc));
        }
    }
    return d;
}

CorrelationProfile correlation_profile(const PortLayout &layout) {
    const std::vector<double> dist = layout.kind == LayoutKind::ula
                                         ? ula_displacements(layout)
                                         : upa_distances(layout);
    CorrelationProfile profile;
    profile.layout = layout;
    profile.rho.resize(dist.size());
    profile.rho[0] = 0.0; // reference port convention
    for (std::size_t n = 1; n < dist.size(); ++n)
        profile.rho[n] = specfun::bessel_j0(two_pi * dist[n]);
    return profile;
}

RicianSpec rician_from_kappa(double kappa) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::domain_error("rician_from_kappa: kappa must be >= 0");
    RicianSpec spec;
    spec.kappa = kappa;
    spec.amp_los = std::sqrt(kappa / (kappa + 1.0));
    spec.sigma2 = 1.0 / (kappa + 1.0);
    return spec;
}

double average_snr(const LinkBudget &budget) {
    for (double v : {budget.distance, budget.wavelength, budget.tx_power,
                     budget.noise_power, budget.signal_power})
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("average_snr: link budget fields must be "
                                    "positive and finite");
    const double ratio = budget.wavelength / (4.0 * 3.141592653589793238462643 *
                                              budget.distance);
    const double path_gain = ratio * ratio;
    return path_gain * budget.tx_power * budget.signal_power /
           budget.noise_power;
}

} // namespace fas
