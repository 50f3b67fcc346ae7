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

#include <vector>

namespace fas {

enum class LayoutKind { ula, upa };

/// Port geometry of the fluid antenna aperture.  `aperture` is the span W in
/// carrier wavelengths: a line of length W*lambda (ULA) or a W*lambda square
/// (UPA with sqrt(N) ports per side).
struct PortLayout {
    LayoutKind kind = LayoutKind::ula;
    int num_ports = 2;
    double aperture = 1.0;
};

/// Validated layout factories.  ULA needs N >= 2, UPA needs a perfect square
/// N >= 4; violations raise layout_error.
PortLayout make_ula(int num_ports, double aperture);
PortLayout make_upa(int num_ports, double aperture);

/// Spatial correlation of every port against port 1.
///
/// rho[0] is 0 by convention: the reference port enters the statistics
/// through the unconditional Rician law, so its self-correlation slot is
/// never consumed.  Entries may be negative (the Jakes kernel oscillates);
/// |rho[n]| < 1 whenever port spacing is positive.
struct CorrelationProfile {
    std::vector<double> rho;
    PortLayout layout;

    int num_ports() const { return static_cast<int>(rho.size()); }

    /// Degenerate single-port profile (rho = {0}); the geometry operations
    /// below require at least two ports, but the performance metrics are
    /// well defined for one.
    static CorrelationProfile single_port();
};

/// Rician small-scale fading parameters, power normalized so that
/// amp_los^2 + sigma2 = 1.
struct RicianSpec {
    double kappa = 0.0;   // LoS/NLoS power ratio
    double amp_los = 0.0; // A = sqrt(kappa/(kappa+1))
    double sigma2 = 1.0;  // NLoS power 1/(kappa+1)
};

/// Link-budget inputs for the average received SNR.  All watts/meters,
/// strictly positive.
struct LinkBudget {
    double distance;
    double wavelength;
    double tx_power;
    double noise_power;
    double signal_power = 1.0; // E(|s|^2)
};

/// Port displacements from the reference port for a ULA layout, in
/// wavelengths: element n is ((n-1)/(N-1)) * W.  Strictly increasing,
/// first element 0, last element W.
std::vector<double> ula_displacements(const PortLayout &layout);

/// Euclidean distances from the top-left reference port for a UPA layout,
/// row-major over the sqrt(N) x sqrt(N) grid, in wavelengths.  First element
/// 0, maximum W*sqrt(2).
std::vector<double> upa_distances(const PortLayout &layout);

/// Jakes-model correlation against the reference port:
/// rho[n] = J0(2*pi*d_n) with d_n the port distance in wavelengths, and
/// rho[0] forced to 0.
CorrelationProfile correlation_profile(const PortLayout &layout);

/// Power-normalized Rician parameters from the Rician factor kappa >= 0.
RicianSpec rician_from_kappa(double kappa);

/// Average received SNR: l(d) * p * E(|s|^2) / noise, with the free-space
/// large-scale coefficient l(d) = d^{-2} (lambda / 4 pi)^2.
double average_snr(const LinkBudget &budget);

} // namespace fas
