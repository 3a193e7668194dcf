#include "metasurf/layered.hpp"

#include "metasurf/constants.hpp"
#include "metasurf/error.hpp"

#include <algorithm>
#include <cmath>

namespace msurf {

namespace {
constexpr double kLogScaleThreshold = 300.0;
}

Mat2 TransferMatrix2::value() const { return std::exp(log_scale) * m; }

Mat2 matching_matrix(const ReciprocalVector& k, cplx eps, Pol lambda) {
    const cplx K = z_wavenumber(k, eps);
    const double k0 = k.k0();
    const double sx = sgn(k.kx);
    Mat2 M;
    if (lambda == Pol::p) {
        if (k0 == 0.0 || eps == cplx(0.0)) throw DomainError("p matching matrix needs k0 != 0, eps != 0");
        const cplx y = K / (eps * k0);
        M << y, -y, 1.0, 1.0;
        return phys::Z0 * sgn(k.omega) * sx * M;
    }
    const double nrm = std::sqrt(std::norm(K) + k.kpar() * k.kpar());
    if (nrm == 0.0) throw DomainError("s matching matrix needs K or k_par nonzero");
    M << K / nrm, -K / nrm, k0 / nrm, k0 / nrm;
    return phys::Z0 * sx * M;
}

Mat2 propagation_matrix(const ReciprocalVector& k, cplx eps, double d) {
    const cplx K = z_wavenumber(k, eps);
    const cplx i(0.0, 1.0);
    Mat2 C = Mat2::Zero();
    C(0, 0) = std::exp(i * K * d * 0.5);
    C(1, 1) = std::exp(-i * K * d * 0.5);
    return C;
}

TransferMatrix2 interface_transfer(const ReciprocalVector& k, cplx eps_from, cplx eps_to, Pol lambda) {
    const Mat2 a = matching_matrix(k, eps_from, lambda);
    const Mat2 b = matching_matrix(k, eps_to, lambda);
    return {a.inverse() * b, 0.0};
}

TransferMatrix2 film_transfer(const FilmStack& st, const ReciprocalVector& k, Pol lambda) {
    if (st.d < 0.0) throw DomainError("film thickness must be non-negative");
    const Mat2 vm = interface_transfer(k, st.eps_v, st.eps_m, lambda).m;
    const Mat2 mi = interface_transfer(k, st.eps_m, st.eps_i, lambda).m;
    const cplx K = z_wavenumber(k, st.eps_m);
    const cplx i(0.0, 1.0);
    const double growth = std::abs(K.imag()) * st.d;
    double L = 0.0;
    Mat2 CC = Mat2::Zero();
    if (growth > kLogScaleThreshold) {
        L = growth;
        CC(0, 0) = std::exp(i * K * st.d - growth);
        CC(1, 1) = std::exp(-i * K * st.d - growth);
    } else {
        const Mat2 C = propagation_matrix(k, st.eps_m, st.d);
        CC = C * C;
    }
    return {vm * CC * mi, L};
}

ScatteringMatrix2 scattering_from_transfer(const TransferMatrix2& t) {
    const Mat2& m = t.m;
    const cplx mmm = m(1, 1);
    if (mmm == cplx(0.0)) throw PoleError("M-- vanishes: bound state");
    const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Mat2 S;
    S << m(0, 1) / mmm, std::exp(t.log_scale) * det / mmm, std::exp(-t.log_scale) / mmm,
        -m(1, 0) / mmm;
    return {S};
}

cplx xi(double omega, double kpar, cplx eps_a, cplx eps_b) {
    const cplx Ka = z_wavenumber(omega, kpar, eps_a);
    const cplx Kb = z_wavenumber(omega, kpar, eps_b);
    const cplx den = Kb / eps_b;
    if (den == cplx(0.0)) throw PoleError("xi denominator vanishes");
    return -(Ka / eps_a) / den;
}

std::pair<double, double> spp_single_explicit(double kpar, const DrudeLorentz& model) {
    const double ws = model.omega_sp();
    const double ck = phys::c * kpar;
    const double ws2 = ws * ws, ck2 = ck * ck;
    const double root = std::sqrt(ws2 * ws2 + ck2 * ck2);
    // lower branch without cancellation: a - root = (a^2 - root^2)/(a + root), a^2 - root^2 = 2 ws2 ck2
    const double a = ws2 + ck2;
    const double lower2 = 2.0 * ws2 * ck2 / (a + root);
    return {std::sqrt(std::max(lower2, 0.0)), std::sqrt(a + root)};
}

double spp_single_residual(double omega, double kpar, const DrudeLorentz& model, double eps_v) {
    const cplx em = permittivity(model, omega);
    return std::abs(xi(omega, kpar, em, eps_v) - 1.0);
}

double te_mode_residual(double omega, double kpar, const DrudeLorentz& model, double eps_v) {
    const cplx em = permittivity(model, omega);
    const cplx Kv = z_wavenumber(omega, kpar, eps_v);
    const cplx Km = z_wavenumber(omega, kpar, em);
    return std::abs(Kv + Km) / (std::abs(Kv) + std::abs(Km));
}

namespace {

struct Decay {
    double kv, km, ki;   // Im K in each layer
};

Decay decays(double omega, double kpar, const FilmSpec& f, double em, Regime r) {
    if (r == Regime::quasistatic) return {kpar, kpar, kpar};
    const double k0 = omega / phys::c;
    auto kap = [&](double e) {
        const double v = kpar * kpar - e * k0 * k0;
        if (v <= 0.0) throw DomainError("film residual outside the evanescent window");
        return std::sqrt(v);
    };
    return {kap(f.eps_v), kap(em), kap(f.eps_i)};
}

double real_eps_m(const DrudeLorentz& model, double omega) {
    if (!model.free_electron_limit()) throw DomainError("film solver requires a lossless free-electron metal");
    return permittivity(model, omega).real();
}

// (1 - xi)/(1 + xi) with xi = -(kap_m/em)/(kap_o/eo), all real
double q_ratio(double kap_m, double em, double kap_o, double eo) {
    const double x = -(kap_m / em) / (kap_o / eo);
    return (1.0 - x) / (1.0 + x);
}

} // namespace

double film_search_limit(double kpar, const FilmSpec& f, const DrudeLorentz& model, Regime r) {
    double lim = model.omega_p;
    if (r == Regime::retarded) {
        lim = std::min(lim, phys::c * kpar / std::sqrt(f.eps_v));
        lim = std::min(lim, phys::c * kpar / std::sqrt(f.eps_i));
    }
    return lim;
}

double film_residual(double omega, double kpar, const FilmSpec& f, const DrudeLorentz& model, Regime r) {
    const double em = real_eps_m(model, omega);
    const Decay k = decays(omega, kpar, f, em, r);
    return q_ratio(k.km, em, k.kv, f.eps_v) * q_ratio(k.km, em, k.ki, f.eps_i) -
           std::exp(-2.0 * k.km * f.d);
}

double film_residual_symmetric(double omega, double kpar, const FilmSpec& f,
                               const DrudeLorentz& model, int branch, Regime r) {
    const double em = real_eps_m(model, omega);
    const Decay k = decays(omega, kpar, f, em, r);
    return q_ratio(k.km, em, k.kv, f.eps_v) - branch * std::exp(-k.km * f.d);
}

std::vector<FilmRoot> film_dispersion_solve(const FilmSpec& f, double kpar, const DrudeLorentz& model,
                                            Regime r) {
    if (!(f.d > 0.0)) throw DomainError("film thickness must be positive");
    if (!(kpar > 0.0)) throw DomainError("k_par must be positive");
    model.validate();
    const double top = film_search_limit(kpar, f, model, r) * (1.0 - 1e-13);
    const double bottom = top * 1e-7;
    constexpr int n = 2048;
    auto scan = [&](const std::function<double(double)>& fn) {
        std::vector<double> roots;
        const double step = std::log(top / bottom) / (n - 1);
        double w0 = bottom, f0 = fn(w0);
        for (int j = 1; j < n; ++j) {
            const double w1 = (j == n - 1) ? top : bottom * std::exp(step * j);
            const double f1 = fn(w1);
            if (f0 == 0.0) roots.push_back(w0);
            else if ((f0 > 0) != (f1 > 0)) roots.push_back(bisect(fn, w0, w1, 1e-13));
            w0 = w1;
            f0 = f1;
        }
        return roots;
    };
    std::vector<FilmRoot> out;
    if (f.eps_v == f.eps_i) {
        for (int branch : {+1, -1}) {
            const auto roots = scan([&](double w) { return film_residual_symmetric(w, kpar, f, model, branch, r); });
            for (double w : roots) out.push_back({w, branch > 0 ? Parity::even : Parity::odd});
        }
    } else {
        const auto roots = scan([&](double w) { return film_residual(w, kpar, f, model, r); });
        for (std::size_t j = 0; j < roots.size(); ++j)
            out.push_back({roots[j], j == 0 ? Parity::even : Parity::odd});
    }
    if (out.empty()) throw BracketError("no film mode found below the light lines at this k_par");
    std::sort(out.begin(), out.end(), [](const FilmRoot& a, const FilmRoot& b) { return a.omega < b.omega; });
    return out;
}

QuasistaticPair quasistatic_film_modes(double kpar, double d, double omega_sp) {
    if (!(kpar > 0.0) || !(d > 0.0)) throw DomainError("k_par and d must be positive");
    const double e = std::exp(-kpar * d);
    return {omega_sp * std::sqrt(1.0 - e), omega_sp * std::sqrt(1.0 + e)};
}

QuasistaticPair quasistatic_film_modes_general(double u, double eps_v, double eps_i) {
    if (!(u > 0.0)) throw DomainError("u = k_par d must be positive");
    const double E = std::exp(-2.0 * u);
    const double a = -std::expm1(-2.0 * u);
    const double b = (1.0 + E) * (eps_v + eps_i);
    const double c = a * eps_v * eps_i;
    const double disc = b * b - 4.0 * a * c;
    const double qq = -0.5 * (b + std::sqrt(std::max(disc, 0.0)));
    // eps_m roots qq/a (even) and c/qq (odd); omega^2 = omega_p^2 / (1 - eps_m)
    return {std::sqrt(a / (a - qq)), std::sqrt(qq / (qq - c))};
}

} // namespace msurf
