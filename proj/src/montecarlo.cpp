// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fasperf/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "fasperf/errors.hpp"

namespace fas {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;
constexpr double inv_sqrt2 = 0.70710678118654752440084436210485;
} // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double Rng::uniform() {
    // 53 uniform bits; +1 keeps the value in (0, 1] so log() stays finite.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
}

std::vector<std::complex<double>> sample_ports(const RicianSpec &rician,
                                               const CorrelationProfile &corr,
                                               Rng &rng) {
    const double sigma = std::sqrt(rician.sigma2);
    const double a = rician.amp_los;
    const int n = corr.num_ports();
    // All mixing variates are N(0, 1/2): standard normals scaled by 1/sqrt(2).
    const double x0 = rng.normal() * inv_sqrt2;
    const double y0 = rng.normal() * inv_sqrt2;
    std::vector<std::complex<double>> h(n);
    h[0] = {sigma * x0 + a, sigma * y0};
    for (int i = 1; i < n; ++i) {
        const double rho = corr.rho[i];
        const double mix = std::sqrt(1.0 - rho * rho);
        const double xn = rng.normal() * inv_sqrt2;
        const double yn = rng.normal() * inv_sqrt2;
        h[i] = {sigma * (mix * xn + rho * x0) + a,
                sigma * (mix * yn + rho * y0)};
    }
    return h;
}

std::vector<double> sample_port_gains(const RicianSpec &rician,
                                      const CorrelationProfile &corr,
                                      Rng &rng) {
    const auto h = sample_ports(rician, corr, rng);
    std::vector<double> gains(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        gains[i] = std::abs(h[i]);
    return gains;
}

std::vector<double> sample_port_gains_conditioned(
    const RicianSpec &rician, const CorrelationProfile &corr, Rng &rng) {
    const double sigma = std::sqrt(rician.sigma2);
    const double a2 = rician.amp_los * rician.amp_los;
    const int n = corr.num_ports();
    std::vector<double> gains(n);
    const double m1 = std::hypot(rician.amp_los + sigma * rng.normal() * inv_sqrt2,
                                 sigma * rng.normal() * inv_sqrt2);
    gains[0] = m1;
    for (int i = 1; i < n; ++i) {
        const double r2 = corr.rho[i] * corr.rho[i];
        const double los = std::sqrt(r2 * m1 * m1 + (1.0 - r2) * a2);
        const double scale = sigma * std::sqrt(1.0 - r2) * inv_sqrt2;
        gains[i] = std::hypot(los + scale * rng.normal(),
                              scale * rng.normal());
    }
    return gains;
}

int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("FASPERF_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Runs `chunk_fn(chunk_index, chunk_samples, rng)` over all chunks on a small
// worker pool.  Every chunk draws from its own substream, so the partition of
// work across threads cannot change any estimate.
template <class ChunkFn>
void run_chunks(const SimConfig &sim, ChunkFn &&chunk_fn) {
    if (sim.num_samples < 1)
        throw validation_error("num_samples must be >= 1");
    const std::uint64_t chunk = std::max<std::uint64_t>(1, sim.chunk_size);
    const std::uint64_t n_chunks = (sim.num_samples + chunk - 1) / chunk;
    const int threads =
        static_cast<int>(std::min<std::uint64_t>(resolve_threads(sim.threads),
                                                 n_chunks));

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < n_chunks;
             i = next.fetch_add(1)) {
            const std::uint64_t begin = i * chunk;
            const std::uint64_t count =
                std::min(chunk, sim.num_samples - begin);
            Rng rng(mix64(sim.master_seed ^ mix64(i + 1)));
            chunk_fn(i, count, rng);
        }
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto &th : pool)
        th.join();
}

} // namespace

EmpiricalEstimate op_empirical(const OutageQuery &q, const SimConfig &sim) {
    if (!(q.gamma_th > 0.0))
        throw std::domain_error("op_empirical: gamma_th must be positive");
    std::vector<std::uint64_t> hits((sim.num_samples + sim.chunk_size - 1) /
                                        std::max<std::uint64_t>(1, sim.chunk_size),
                                    0);
    run_chunks(sim, [&](std::uint64_t idx, std::uint64_t count, Rng &rng) {
        std::uint64_t c = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            const auto gains =
                sample_port_gains_conditioned(q.rician, q.corr, rng);
            double best = 0.0;
            for (double g : gains)
                best = std::max(best, g * g);
            if (best < q.gamma_th)
                ++c;
        }
        hits[idx] = c;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits)
        total += h;
    const double m = static_cast<double>(sim.num_samples);
    const double p = static_cast<double>(total) / m;
    return {p, std::sqrt(p * (1.0 - p) / m), sim.num_samples};
}

EmpiricalEstimate er_empirical(const RicianSpec &rician,
                               const CorrelationProfile &corr,
                               const SimConfig &sim) {
    const std::uint64_t n_chunks =
        (sim.num_samples + sim.chunk_size - 1) /
        std::max<std::uint64_t>(1, sim.chunk_size);
    std::vector<double> sums(n_chunks, 0.0), sqs(n_chunks, 0.0);
    run_chunks(sim, [&](std::uint64_t idx, std::uint64_t count, Rng &rng) {
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t k = 0; k < count; ++k) {
            const auto gains = sample_port_gains_conditioned(rician, corr, rng);
            double best = 0.0;
            for (double g : gains)
                best = std::max(best, g * g);
            const double r = std::log2(1.0 + best);
            s += r;
            s2 += r * r;
        }
        sums[idx] = s;
        sqs[idx] = s2;
    });
    double s = 0.0, s2 = 0.0;
    for (std::uint64_t i = 0; i < n_chunks; ++i) {
        s += sums[i];
        s2 += sqs[i];
    }
    const double m = static_cast<double>(sim.num_samples);
    const double mean = s / m;
    const double var = std::max(0.0, s2 / m - mean * mean);
    return {mean, std::sqrt(var / m), sim.num_samples};
}

EmpiricalEstimate mrc_empirical(int branches, double kappa, double gamma_th,
                                const SimConfig &sim) {
    if (branches < 1)
        throw std::domain_error("mrc_empirical: branch count must be >= 1");
    if (!(kappa >= 0.0) || !(gamma_th > 0.0))
        throw std::domain_error("mrc_empirical: kappa >= 0 and gamma_th > 0 "
                                "required");
    const RicianSpec spec = rician_from_kappa(kappa);
    const double sigma = std::sqrt(spec.sigma2);
    const std::uint64_t n_chunks =
        (sim.num_samples + sim.chunk_size - 1) /
        std::max<std::uint64_t>(1, sim.chunk_size);
    std::vector<std::uint64_t> hits(n_chunks, 0);
    run_chunks(sim, [&](std::uint64_t idx, std::uint64_t count, Rng &rng) {
        std::uint64_t c = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            double power = 0.0;
            for (int l = 0; l < branches; ++l) {
                const double re =
                    spec.amp_los + sigma * rng.normal() * inv_sqrt2;
                const double im = sigma * rng.normal() * inv_sqrt2;
                power += re * re + im * im;
            }
            if (power < gamma_th)
                ++c;
        }
        hits[idx] = c;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits)
        total += h;
    const double m = static_cast<double>(sim.num_samples);
    const double p = static_cast<double>(total) / m;
    return {p, std::sqrt(p * (1.0 - p) / m), sim.num_samples};
}

} // namespace fas
