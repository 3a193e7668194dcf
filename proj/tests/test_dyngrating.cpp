#include "doctest.h"

#include "metasurf/constants.hpp"
#include "metasurf/dyngrating.hpp"
#include "metasurf/error.hpp"

#include <cmath>
#include <random>

using namespace msurf;

namespace {
const double c = phys::c, pi = phys::pi;
const double g0 = 2.0 * pi / 1e-6;

GratingConfig make(double A, double Omega_gc, double omega_gc, double theta, Pol pol, int m_c = 3) {
    GratingConfig cfg;
    cfg.A = A;
    cfg.g = g0;
    cfg.Omega = Omega_gc * g0 * c;
    cfg.m_c = m_c;
    cfg.incidence = {omega_gc * g0 * c, theta, pol, 1.0};
    return cfg;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
} // namespace

TEST_CASE("boundary geometry") {
    GratingConfig cfg = make(50e-9, 0.2, 0.8, 0.0, Pol::s);
    const auto b0 = boundary_geometry(cfg, 0.0, 0.0);
    CHECK(b0.a == 0.0);
    CHECK(b0.a_x == doctest::Approx(cfg.A * cfg.g));
    CHECK(b0.a_t == doctest::Approx(-cfg.A * cfg.Omega));
    const auto b1 = boundary_geometry(cfg, 0.25e-6, 0.0);
    CHECK(b1.a == doctest::Approx(cfg.A));
    CHECK(std::abs(b1.a_x) < 1e-12);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = U(rng) * 1e-6, t = U(rng) * 1e-14;
        const auto b = boundary_geometry(cfg, x, t);
        CHECK(dot3(b.t1, b.t1) == doctest::Approx(1.0));
        CHECK(dot3(b.t2, b.t2) == doctest::Approx(1.0));
        CHECK(dot3(b.n, b.n) == doctest::Approx(1.0));
        CHECK(std::abs(dot3(b.t1, b.t2)) < 1e-14);
        CHECK(std::abs(dot3(b.t1, b.n)) < 1e-14);
        CHECK(std::abs(dot3(b.t2, b.n)) < 1e-14);
        // normal along grad(z - a)
        CHECK(b.n[2] > 0.0);
        CHECK(b.n[0] / b.n[2] == doctest::Approx(-b.a_x));
    }
}

TEST_CASE("configuration guards") {
    GratingConfig cfg = make(50e-9, 0.2, 0.8, 0.0, Pol::s);
    CHECK_NOTHROW(cfg.validate());
    GratingConfig deep = cfg;
    deep.A = 0.6 / cfg.g;
    CHECK_THROWS_AS(deep.validate(), DomainError);
    GratingConfig fast = cfg;
    fast.A = 0.4 / cfg.g;
    fast.Omega = 1.01 * c / fast.A;
    CHECK_THROWS_AS(fast.validate(), DomainError);
    GratingConfig neg = cfg;
    neg.A = -1e-9;
    CHECK_THROWS_AS(neg.validate(), DomainError);
    GratingConfig mc = cfg;
    mc.m_c = 0;
    CHECK_THROWS_AS(mc.validate(), DomainError);
    GratingConfig graze = cfg;
    graze.incidence.theta = pi / 2;
    CHECK_THROWS_AS(graze.validate(), DomainError);
}

TEST_CASE("coefficient matrix structure") {
    SUBCASE("flat boundary gives diagonal blocks") {
        for (Pol pol : {Pol::s, Pol::p}) {
            GratingConfig cfg = make(0.0, 0.2, 0.8, 0.3, pol);
            const auto m = pol == Pol::s ? build_matrices_s(cfg) : build_matrices_p(cfg);
            for (const MatX* X : {&m.M_inc, &m.N_inc, &m.M_ref, &m.N_ref, &m.M_tra, &m.N_tra}) {
                MatX off = *X;
                off.diagonal().setZero();
                CHECK(off.norm() == 0.0);
            }
        }
    }
    SUBCASE("static grating has no moving-boundary term") {
        for (Pol pol : {Pol::s, Pol::p}) {
            GratingConfig cfg = make(20e-9, 0.0, 0.8, 0.3, pol);
            const auto m = pol == Pol::s ? build_matrices_s(cfg) : build_matrices_p(cfg);
            CHECK(m.L.norm() == 0.0);
        }
    }
    SUBCASE("band structure scales with powers of A") {
        GratingConfig a = make(1e-9, 0.2, 0.8, 0.3, Pol::s), b = a;
        b.A = 2e-9;
        const auto ma = build_matrices_s(a), mb = build_matrices_s(b);
        const int l = a.m_c;
        CHECK(std::abs(mb.M_tra(l, l + 1) / ma.M_tra(l, l + 1)) == doctest::Approx(2.0).epsilon(1e-4));
        CHECK(std::abs(mb.M_tra(l, l + 2) / ma.M_tra(l, l + 2)) == doctest::Approx(4.0).epsilon(1e-3));
        CHECK(std::abs(mb.L(l, l + 1) / ma.L(l, l + 1)) == doctest::Approx(2.0).epsilon(1e-4));
    }
    SUBCASE("printed moving-boundary term differs by 2 eps_below") {
        GratingConfig cfg = make(20e-9, 0.2, 0.8, 0.3, Pol::p);
        const auto d = build_matrices_p(cfg, LTildeForm::derived);
        const auto p = build_matrices_p(cfg, LTildeForm::printed);
        CHECK((p.L - 2.0 * cfg.eps_below * d.L).norm() < 1e-12 * p.L.norm());
        CHECK(d.L.norm() > 0.0);
    }
}

TEST_CASE("flat limit reproduces the interface Fresnel coefficients") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> W(0.1, 1.5), T(-1.2, 1.2);
    for (int i = 0; i < 20; ++i) {
        const double w = W(rng), th = T(rng);
        for (Pol pol : {Pol::s, Pol::p}) {
            GratingConfig cfg = make(0.0, 0.0, w, th, pol, 2);
            const auto r = solve_diffraction(cfg);
            const ReciprocalVector k{cfg.kx(), 0.0, cfg.incidence.omega};
            // wave incident from the side of the second argument
            const Fresnel f = fresnel(k, cfg.eps_below, cfg.eps_above);
            const cplx expect = pol == Pol::s ? f.r_s : f.r_p;
            CHECK(std::abs(r.R(cfg.m_c, cfg.m_c) - expect) < 1e-12);
            MatX off = r.R;
            off.diagonal().setZero();
            CHECK(off.norm() < 1e-12);
        }
    }
    // normal incidence, glass below
    const auto s = solve_diffraction(make(0.0, 0.0, 0.8, 0.0, Pol::s, 2));
    CHECK(s.R(2, 2).real() == doctest::Approx(-0.2));
    CHECK(s.T(2, 2).real() == doctest::Approx(0.8));
}

TEST_CASE("energy balance of a static lossless grating") {
    for (Pol pol : {Pol::s, Pol::p}) {
        for (double th : {0.0, 0.3, -0.6}) {
            GratingConfig cfg = make(50e-9, 0.0, 0.8, th, pol, 6);
            const auto r = solve_diffraction(cfg);
            CHECK(flux_ratio(cfg, r) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("mirror symmetry of a static grating") {
    for (Pol pol : {Pol::s, Pol::p}) {
        const auto a = solve_diffraction(make(30e-9, 0.0, 0.8, 0.35, pol, 5));
        const auto b = solve_diffraction(make(30e-9, 0.0, 0.8, -0.35, pol, 5));
        for (int m = -2; m <= 2; ++m) {
            CHECK(a.reflected.intensity(m) == doctest::Approx(b.reflected.intensity(-m)).epsilon(1e-9));
            CHECK(a.transmitted.intensity(m) == doctest::Approx(b.transmitted.intensity(-m)).epsilon(1e-9));
        }
    }
}

TEST_CASE("travelling grating breaks the +-1 symmetry") {
    const auto r = solve_diffraction(make(20e-9, 0.2, 0.75, 0.0, Pol::s, 4));
    const double tp = r.transmitted.intensity(+1), tm = r.transmitted.intensity(-1);
    CHECK(tp > 0.0);
    CHECK(tm > 0.0);
    CHECK(std::max(tp, tm) / std::min(tp, tm) > 1.1);
    // standing (Omega = 0) counterpart is symmetric at normal incidence
    const auto s = solve_diffraction(make(20e-9, 0.0, 0.75, 0.0, Pol::s, 4));
    CHECK(s.transmitted.intensity(1) == doctest::Approx(s.transmitted.intensity(-1)).epsilon(1e-10));
}

TEST_CASE("first-order intensity grows as A^2") {
    std::vector<double> lx, ly;
    for (double A : {0.5e-9, 1e-9, 2e-9, 4e-9}) {
        const auto r = solve_diffraction(make(A, 0.2, 0.75, 0.1, Pol::s, 4));
        lx.push_back(std::log(A));
        ly.push_back(std::log(r.transmitted.intensity(1)));
    }
    const double slope = (ly.back() - ly.front()) / (lx.back() - lx.front());
    CHECK(slope == doctest::Approx(2.0).epsilon(1e-2));
}

TEST_CASE("scaling invariance") {
    // (g, Omega, omega) -> nu (g, Omega, omega), A -> A / nu leaves amplitudes unchanged
    for (Pol pol : {Pol::s, Pol::p}) {
        GratingConfig base = make(20e-9, 0.2, 0.75, 0.3, pol, 4);
        const auto r0 = solve_diffraction(base);
        for (double nu : {0.5, 2.0, 10.0}) {
            GratingConfig s = base;
            s.g *= nu;
            s.Omega *= nu;
            s.incidence.omega *= nu;
            s.A /= nu;
            const auto r = solve_diffraction(s);
            CHECK((r.R - r0.R).norm() < 1e-9 * r0.R.norm());
            CHECK((r.T - r0.T).norm() < 1e-9 * r0.T.norm());
        }
    }
}

TEST_CASE("truncation convergence") {
    for (Pol pol : {Pol::s, Pol::p}) {
        const auto a = solve_diffraction(make(20e-9, 0.2, 0.75, 0.3, pol, 3));
        const auto b = solve_diffraction(make(20e-9, 0.2, 0.75, 0.3, pol, 6));
        for (int m = -1; m <= 1; ++m) {
            CHECK(std::abs(a.transmitted.at(m) / b.transmitted.at(m) - 1.0) < 1e-3);
            CHECK(std::abs(a.reflected.at(m) / b.reflected.at(m) - 1.0) < 1e-3);
        }
    }
}

TEST_CASE("near-singular systems are reported with the grazing harmonic") {
    GratingConfig cfg = make(1e-9, 0.2, 0.8, 0.0, Pol::s, 3);
    int h = 99;
    const double wd = wood_distance(cfg, &h);
    CHECK(wd < 1e-12);
    CHECK(h == 1);
    try {
        solve_diffraction(cfg, 10.0);
        FAIL("expected SingularSystemError");
    } catch (const SingularSystemError& e) {
        CHECK(e.harmonic == 1);
        CHECK(e.condition > 10.0);
    }
    CHECK_NOTHROW(solve_diffraction(cfg));
}

TEST_CASE("Wood anomaly angles") {
    GratingConfig cfg = make(10e-9, 0.0, 0.8, 0.0, Pol::s, 3);
    const auto angles = wood_anomaly_angles(cfg, {-1, 1});
    CHECK_FALSE(angles.empty());
    for (double th : angles) {
        GratingConfig at = cfg;
        at.incidence.theta = th;
        CHECK(wood_distance(at) < 1e-8);
    }
}

TEST_CASE("tangential field continuity on the boundary") {
    // quasi-static drive (omega = 0) of a slowly moving grating
    for (double v : {0.2, 0.8}) {
        GratingConfig cfg = make(10e-9, v, 0.0, 0.0, Pol::s, 10);
        const auto r = solve_diffraction(cfg);
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double x = 1e-6 * i / 64.0;
            const double a = boundary_geometry(cfg, x, 0.0).a;
            const auto up = field_above(cfg, r, x, a);
            const auto dn = field_below(cfg, r, x, a);
            worst = std::max(worst, std::abs(up[1] - dn[1]));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("scattered field decays away from a subluminal grating") {
    auto profile = [](double v) {
        GratingConfig cfg = make(50e-9, v, 0.0, 0.0, Pol::s, 10);
        const auto r = solve_diffraction(cfg);
        std::vector<double> xs, zs{3.0 / g0, 1.5 / g0, 1.2 * cfg.A, -1.2 * cfg.A, -1.5 / g0, -3.0 / g0};
        for (int i = 0; i < 32; ++i) xs.push_back(1e-6 * i / 32.0);
        const auto I = reconstruct_fields(cfg, r, xs, zs, {0.0, true});
        std::vector<double> mean(zs.size(), 0.0);
        for (std::size_t ix = 0; ix < xs.size(); ++ix)
            for (std::size_t iz = 0; iz < zs.size(); ++iz) mean[iz] += I[ix * zs.size() + iz] / xs.size();
        return mean;
    };
    const auto sub = profile(0.2);
    CHECK(sub[0] < sub[1]);
    CHECK(sub[1] < sub[2]);
    CHECK(sub[5] < sub[4]);
    CHECK(sub[4] < sub[3]);
    CHECK(sub[0] / sub[2] < 1e-2);
    CHECK(sub[5] / sub[3] < 1e-2);
    // above threshold in both media the first harmonics radiate
    const auto sup = profile(1.2);
    CHECK(sup[0] / sup[2] > 0.1);
    CHECK(sup[5] / sup[3] > 0.1);
}

TEST_CASE("Cerenkov angles") {
    CHECK_FALSE(cerenkov_angle(0.5 * c, 1.0).has_value());
    CHECK(cerenkov_angle(c, 1.0).value_or(0.0) < 1e-7);
    CHECK(*cerenkov_angle(std::sqrt(2.0) * c, 1.0) == doctest::Approx(pi / 4));
    CHECK(*cerenkov_angle(0.8 * c, 2.25) == doctest::Approx(std::atan(std::sqrt(0.44))));
    CHECK_FALSE(cerenkov_angle(0.6 * c, 2.25).has_value());

    // every radiating harmonic of a statically driven grating leaves at the same angle
    GratingConfig cfg = make(10e-9, 0.8, 0.0, 0.0, Pol::s, 4);
    const double th = *cerenkov_angle(cfg.v_ph(), cfg.eps_below.real());
    for (int m : {-3, -2, -1, 1, 2, 3}) {
        const auto a = harmonic_angle(cfg, m, true);
        REQUIRE(a.has_value());
        CHECK(std::abs(std::tan(*a)) == doctest::Approx(std::tan(th)).epsilon(1e-10));
        CHECK_FALSE(harmonic_angle(cfg, m, false).has_value());
        // evanescent above: decaying away from the boundary
        CHECK(z_wavenumber(cfg.replica(m), cfg.eps_above).imag() > 0.0);
    }
}

TEST_CASE("static modulated replicas are the limit of nearby frequencies") {
    // omega_in = 0.8 gc, Omega = 0.2 gc: harmonic -4 has omega = 0 and k_x = -4g
    for (Pol pol : {Pol::s, Pol::p}) {
        // off normal incidence: at theta = 0 harmonic +1 also grazes
        const GratingConfig cfg = make(1e-9, 0.2, 0.8, 0.1, pol, 6);
        REQUIRE(static_replica(cfg, -4));
        CHECK_FALSE(static_replica(cfg, 0));
        const auto r = solve_diffraction(cfg);
        for (double eps : {1e-9, -1e-9}) {
            GratingConfig near = cfg;
            near.incidence.omega *= 1.0 + eps;
            const auto q = solve_diffraction(near);
            for (int m : {-1, 0, 1}) {
                CHECK(std::abs(q.transmitted.at(m) / r.transmitted.at(m) - 1.0) < 1e-7);
                CHECK(std::abs(q.reflected.at(m) / r.reflected.at(m) - 1.0) < 1e-7);
            }
            CHECK(std::abs(q.transmitted.at(-4) - r.transmitted.at(-4)) < 1e-3 * std::abs(r.transmitted.at(-4)) + 1e-15);
            CHECK(q.condition < 1e8);
        }
        if (pol == Pol::s) CHECK(r.transmitted.at(-4) == cplx(0.0));
    }
}
