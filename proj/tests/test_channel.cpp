// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fasperf/channel.hpp"
#include "fasperf/errors.hpp"
#include "oracles.hpp"

using namespace fas;

TEST_CASE("ula_displacements") {
    CHECK(ula_displacements(make_ula(2, 1.0)) == std::vector<double>{0.0, 1.0});
    CHECK(ula_displacements(make_ula(3, 1.0)) ==
          std::vector<double>{0.0, 0.5, 1.0});
    CHECK(ula_displacements(make_ula(5, 2.0)) ==
          std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    CHECK_THROWS_AS(make_ula(1, 1.0), layout_error);
    CHECK_THROWS_AS(ula_displacements(make_upa(4, 1.0)), layout_error);
}

TEST_CASE("upa_distances") {
    const auto d4 = upa_distances(make_upa(4, 1.0));
    CHECK(d4[0] == 0.0);
    CHECK(d4[1] == 1.0);
    CHECK(d4[2] == 1.0);
    CHECK(d4[3] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const auto d9 = upa_distances(make_upa(9, 1.0));
    CHECK(d9[0] == 0.0);
    CHECK(d9[1] == 0.5);
    CHECK(d9[2] == 1.0);
    CHECK(d9[3] == 0.5);
    CHECK(d9[4] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(d9[5] == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
    CHECK(d9[8] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // scaling linearity
    const auto d4w2 = upa_distances(make_upa(4, 2.0));
    CHECK(d4w2[1] == 2.0);
    CHECK(d4w2[3] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(make_upa(7, 1.0), layout_error);
    CHECK_THROWS_AS(make_upa(2, 1.0), layout_error);
}

TEST_CASE("correlation_profile") {
    const auto ula2 = correlation_profile(make_ula(2, 0.5));
    CHECK(ula2.rho[0] == 0.0);
    CHECK(ula2.rho[1] ==
          doctest::Approx(oracle::j0_integral(3.141592653589793))
              .epsilon(1e-10));

    const auto ula3 = correlation_profile(make_ula(3, 1.0));
    CHECK(ula3.rho[1] == doctest::Approx(-0.3042421776440939).epsilon(1e-10));
    CHECK(ula3.rho[2] == doctest::Approx(0.2202769085399345).epsilon(1e-10));
    CHECK(ula3.rho[2] ==
          doctest::Approx(oracle::j0_integral(2.0 * 3.141592653589793))
              .epsilon(1e-10));

    const auto upa4 = correlation_profile(make_upa(4, 1.0));
    CHECK(upa4.rho[0] == 0.0);
    CHECK(upa4.rho[1] ==
          doctest::Approx(oracle::j0_integral(2.0 * 3.141592653589793))
              .epsilon(1e-10));
    CHECK(upa4.rho[3] ==
          doctest::Approx(
              oracle::j0_integral(2.0 * std::sqrt(2.0) * 3.141592653589793))
              .epsilon(1e-10));

    // magnitudes strictly below 1 away from the reference port
    for (std::size_t n = 1; n < ula3.rho.size(); ++n)
        CHECK(std::abs(ula3.rho[n]) < 1.0);
}

TEST_CASE("ula spacing invariance: doubling W and N-1 keeps rho[1]") {
    const auto a = correlation_profile(make_ula(3, 1.0));
    const auto b = correlation_profile(make_ula(5, 2.0));
    CHECK(a.rho[1] == doctest::Approx(b.rho[1]).epsilon(1e-15));
}

TEST_CASE("upa decorrelates more than ula at matched size") {
    for (int n : {16, 36, 64}) {
        const auto ula = correlation_profile(make_ula(n, 2.0));
        const auto upa = correlation_profile(make_upa(n, 2.0));
        const auto du = ula_displacements(make_ula(n, 2.0));
        const auto dp = upa_distances(make_upa(n, 2.0));
        CHECK(*std::max_element(dp.begin(), dp.end()) >
              *std::max_element(du.begin(), du.end()));
        double mu = 0.0, mp = 0.0;
        for (int i = 1; i < n; ++i) {
            mu += std::abs(ula.rho[i]);
            mp += std::abs(upa.rho[i]);
        }
        CHECK(mp < mu);
    }
}

TEST_CASE("correlation_profile is deterministic") {
    const auto a = correlation_profile(make_ula(8, 2.0));
    const auto b = correlation_profile(make_ula(8, 2.0));
    CHECK(a.rho == b.rho);
}

TEST_CASE("rician_from_kappa") {
    const auto r0 = rician_from_kappa(0.0);
    CHECK(r0.amp_los == 0.0);
    CHECK(r0.sigma2 == 1.0);

    const auto r1 = rician_from_kappa(1.0);
    CHECK(r1.amp_los * r1.amp_los == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r1.sigma2 == doctest::Approx(0.5).epsilon(1e-15));

    const auto big = rician_from_kappa(1e6);
    CHECK(big.sigma2 == doctest::Approx(1e-6).epsilon(1e-9));
    CHECK(big.amp_los * big.amp_los == doctest::Approx(1.0).epsilon(1e-5));

    // power normalization for arbitrary kappa
    for (double k : {0.0, 0.3, 1.0, 7.7, 123.0})
        CHECK(rician_from_kappa(k).amp_los * rician_from_kappa(k).amp_los +
                  rician_from_kappa(k).sigma2 ==
              doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(rician_from_kappa(-0.1), std::domain_error);
}

TEST_CASE("average_snr") {
    const double pi = 3.141592653589793238462643;
    LinkBudget b{1.0 / (4.0 * pi), 1.0, 1.0, 1.0, 1.0};
    CHECK(average_snr(b) == doctest::Approx(1.0).epsilon(1e-14));

    LinkBudget twice = b;
    twice.distance *= 2.0;
    CHECK(average_snr(twice) == doctest::Approx(0.25).epsilon(1e-14));

    LinkBudget boosted = b;
    boosted.tx_power *= 10.0;
    CHECK(average_snr(boosted) == doctest::Approx(10.0).epsilon(1e-14));

    LinkBudget bad = b;
    bad.noise_power = 0.0;
    CHECK_THROWS_AS(average_snr(bad), std::domain_error);
}
