#include "doctest.h"

#include "metasurf/constants.hpp"
#include "metasurf/dyngrating.hpp"
#include "metasurf/error.hpp"
#include "metasurf/radiate.hpp"

#include <cmath>
#include <random>

using namespace msurf;

TEST_CASE("Frank-Tamm spectrum") {
    SwiftCharge q;
    q.beta = 0.9;
    q.n = 1.5;
    const double w = 3e15;
    const double expect = phys::mu0 * q.charge * q.charge * w / (4.0 * phys::pi) * (1.0 - 1.0 / (1.35 * 1.35));
    CHECK(frank_tamm_spectral_power(q, w) == doctest::Approx(expect).epsilon(1e-14));
    // linear in omega
    CHECK(frank_tamm_spectral_power(q, 2.0 * w) == doctest::Approx(2.0 * expect).epsilon(1e-14));

    q.n = 1.0;
    CHECK(frank_tamm_spectral_power(q, w) == 0.0);
    q.beta = 0.5;
    q.n = 2.0;
    CHECK(frank_tamm_spectral_power(q, w) == 0.0);

    CHECK_THROWS_AS(frank_tamm_spectral_power(SwiftCharge{phys::e_charge, 1.2, 1.0}, w), DomainError);
    CHECK_THROWS_AS(frank_tamm_spectral_power(SwiftCharge{phys::e_charge, 0.5, -1.0}, w), DomainError);
    CHECK_THROWS_AS(frank_tamm_spectral_power(q, 0.0), DomainError);
}

TEST_CASE("continuous switch-on at threshold") {
    SwiftCharge q;
    q.n = 1.5;
    const double w = 1e15;
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        q.beta = 1.0 / 1.5 * (1.0 + 1e-6 * i);
        const double p = frank_tamm_spectral_power(q, w);
        CHECK(p >= prev);
        prev = p;
    }
    CHECK(prev < 1e-3 * frank_tamm_spectral_power({phys::e_charge, 1.0, 1.5}, w));
}

TEST_CASE("emission angle agrees with the grating phase-velocity form") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> B(0.05, 1.0), N(1.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const SwiftCharge q{phys::e_charge, B(rng), N(rng)};
        const auto a = cerenkov_angle_particle(q);
        const auto b = cerenkov_angle(q.beta * phys::c, q.n * q.n);
        REQUIRE(a.has_value() == b.has_value());
        if (!a) continue;
        CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
        // tan theta = sqrt((beta n)^2 - 1): sin^2 theta = 1 - 1/(beta n)^2, the Frank-Tamm factor
        const double bn = q.beta * q.n;
        CHECK(std::pow(std::sin(*a), 2) == doctest::Approx(1.0 - 1.0 / (bn * bn)).epsilon(1e-10));
        const double f = frank_tamm_spectral_power(q, 1e15) /
                         (phys::mu0 * q.charge * q.charge * 1e15 / (4.0 * phys::pi));
        CHECK(f == doctest::Approx(std::pow(std::sin(*a), 2)).epsilon(1e-10));
    }
    CHECK(*cerenkov_angle_particle({phys::e_charge, 1.0, std::sqrt(2.0)}) == doctest::Approx(phys::pi / 4));
    CHECK(*cerenkov_angle_particle({phys::e_charge, 1.0, 1.0}) == 0.0);
    CHECK_FALSE(cerenkov_angle_particle({phys::e_charge, 0.5, 1.5}).has_value());
}
