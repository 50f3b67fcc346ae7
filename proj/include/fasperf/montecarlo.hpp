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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fasperf/analysis.hpp"
#include "fasperf/channel.hpp"

namespace fas {

/// Monte Carlo run configuration.  Estimates are bit-identical for a given
/// (config, query) pair regardless of thread count: every chunk of
/// chunk_size samples draws from its own substream derived from
/// (master_seed, chunk index), and chunk results merge in index order.
struct SimConfig {
    std::uint64_t num_samples = 1'000'000;
    std::uint64_t master_seed = 0;
    std::uint64_t chunk_size = 65536;
    /// 0 = use FASPERF_THREADS, falling back to the hardware concurrency.
    int threads = 0;
};

struct EmpiricalEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples_used = 0;
};

/// SplitMix64 finalizer; used to derive substream and per-point seeds.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic normal-variate source.  The Box-Muller transform runs on
/// uniforms built directly from mt19937_64 output bits, so a seed pins the
/// exact sample path on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Standard normal N(0, 1).
    double normal();
    /// Uniform in (0, 1].
    double uniform();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// One draw of the N complex port channels from the constructive model:
/// a shared scattered component for the reference port mixed into every
/// other port with weight rho_n, plus the common LoS offset.  Marginals are
/// exactly Rician(kappa) at every port.
std::vector<std::complex<double>>
sample_ports(const RicianSpec &rician, const CorrelationProfile &corr,
             Rng &rng);

/// Amplitudes |h_1|..|h_N| of one sample_ports draw.
std::vector<double> sample_port_gains(const RicianSpec &rician,
                                      const CorrelationProfile &corr,
                                      Rng &rng);

/// One draw from the reference-conditioned joint amplitude law: the
/// reference amplitude m1 is drawn Rician(kappa), then every other port is
/// drawn Rician with line-of-sight sqrt(rho_n^2 m1^2 + (1-rho_n^2) A^2) and
/// scattered power sigma^2 (1-rho_n^2), conditionally independent given m1.
///
/// This is the joint law whose CDF the analytical outage integral evaluates;
/// the OP/ER estimators below sample it so that they are unbiased for the
/// quantities op_exact and er_exact compute.  The gaussian-mixing
/// construction of sample_ports has identical per-port marginals and agrees
/// with this law exactly at kappa = 0.
std::vector<double> sample_port_gains_conditioned(
    const RicianSpec &rician, const CorrelationProfile &corr, Rng &rng);

/// Empirical outage probability: fraction of draws whose best port power
/// max_n |h_n|^2 falls below gamma_th.  std_error = sqrt(p(1-p)/M).
EmpiricalEstimate op_empirical(const OutageQuery &q, const SimConfig &sim);

/// Empirical ergodic rate: sample mean of log2(1 + max_n |h_n|^2),
/// std_error = sample standard deviation / sqrt(M).
EmpiricalEstimate er_empirical(const RicianSpec &rician,
                               const CorrelationProfile &corr,
                               const SimConfig &sim);

/// Empirical maximum-ratio-combining outage: fraction of draws where the
/// summed branch power of L i.i.d. unit-power Rician branches falls below
/// gamma_th; the event matches the closed form op_mrc evaluates, and
/// coincides with the single-port outage at L = 1.
EmpiricalEstimate mrc_empirical(int branches, double kappa, double gamma_th,
                                const SimConfig &sim);

/// Thread count used by the estimators: `requested` if positive, else the
/// FASPERF_THREADS environment variable, else the hardware concurrency.
int resolve_threads(int requested);

} // namespace fas
