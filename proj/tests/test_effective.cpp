#include "doctest.h"

#include "metasurf/constants.hpp"
#include "metasurf/dyngrating.hpp"
#include "metasurf/effective.hpp"

#include <cmath>

using namespace msurf;

namespace {
const double c = phys::c, pi = phys::pi;
const double g0 = 2.0 * pi / 1e-6;

GratingConfig make(double A, double theta, Pol pol, double Omega_gc = 0.2, int m_c = 3) {
    GratingConfig cfg;
    cfg.A = A;
    cfg.g = g0;
    cfg.Omega = Omega_gc * g0 * c;
    cfg.m_c = m_c;
    cfg.incidence = {0.75 * g0 * c, theta, pol, 1.0};
    return cfg;
}

bool near_wood(const GratingConfig& cfg, double band) {
    for (double th : wood_anomaly_angles(cfg, {-3, -2, -1, 1, 2, 3}))
        if (std::abs(th - cfg.incidence.theta) < band) return true;
    return false;
}

// worst relative deviation of the first-order intensities over an angle sweep
double worst_first_order(double A, Pol pol) {
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const GratingConfig cfg = make(A, (-60.0 + 2.0 * i) * pi / 180.0, pol);
        if (near_wood(cfg, 2.0 * pi / 180.0)) continue;
        const auto full = solve_diffraction(cfg);
        const auto eff = solve_effective(cfg);
        for (int m : {-1, 1}) {
            for (bool tr : {true, false}) {
                const double a = tr ? full.transmitted.intensity(m) : full.reflected.intensity(m);
                const double b = tr ? eff.transmitted.intensity(m) : eff.reflected.intensity(m);
                if (a < 1e-30) continue;
                worst = std::max(worst, std::abs(b / a - 1.0));
            }
        }
    }
    return worst;
}
} // namespace

TEST_CASE("effective sheet parameters") {
    const auto s = EffectiveSurface::from(make(2e-9, 0.0, Pol::s));
    CHECK(s.eps_bar.real() == doctest::Approx(3.25 * 2e-9));
    CHECK(s.delta_eps.real() == doctest::Approx(0.0));
    CHECK(s.delta_eps.imag() == doctest::Approx(-1.25 / 6.5));
}

TEST_CASE("effective matrices have the flat interface on the diagonal") {
    for (Pol pol : {Pol::s, Pol::p}) {
        const GratingConfig cfg = make(2e-9, 0.3, pol);
        GratingConfig flat = cfg;
        flat.A = 0.0;
        const auto e = build_matrices_effective(cfg, pol);
        const auto f = pol == Pol::s ? build_matrices_s(flat) : build_matrices_p(flat);
        CHECK((e.M_tra - f.M_tra).norm() == 0.0);
        CHECK((e.N_ref - f.N_ref).norm() == 0.0);
        // sheet coupling only between neighbouring harmonics
        for (int l = 0; l < cfg.size(); ++l)
            for (int m = 0; m < cfg.size(); ++m)
                if (std::abs(l - m) != 1) CHECK(std::abs(e.L(l, m)) == 0.0);
    }
}

TEST_CASE("vanishing amplitude recovers the flat interface") {
    for (Pol pol : {Pol::s, Pol::p}) {
        const GratingConfig cfg = make(0.0, 0.4, pol);
        const auto e = solve_effective(cfg);
        const auto f = solve_diffraction(cfg);
        CHECK((e.R - f.R).norm() < 1e-13);
        CHECK((e.T - f.T).norm() < 1e-13);
    }
}

TEST_CASE("static sheet is mirror symmetric") {
    for (Pol pol : {Pol::s, Pol::p}) {
        const auto a = solve_effective(make(1e-9, 0.3, pol, 0.0));
        const auto b = solve_effective(make(1e-9, -0.3, pol, 0.0));
        CHECK(a.transmitted.intensity(1) == doctest::Approx(b.transmitted.intensity(-1)).epsilon(1e-9));
        CHECK(a.reflected.intensity(-1) == doctest::Approx(b.reflected.intensity(1)).epsilon(1e-9));
    }
}

TEST_CASE("effective model tracks the full solution for a shallow grating") {
    for (Pol pol : {Pol::s, Pol::p}) {
        CAPTURE(int(pol));
        const double w2 = worst_first_order(2e-9, pol);
        const double w1 = worst_first_order(1e-9, pol);
        const double w05 = worst_first_order(0.5e-9, pol);
        CHECK(w1 < 0.05);
        CHECK(w1 < w2);
        CHECK(w05 < w1);
    }
}
