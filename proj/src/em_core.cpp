#include "metasurf/em_core.hpp"

#include "metasurf/constants.hpp"
#include "metasurf/error.hpp"

#include <cmath>

namespace msurf {

double DrudeLorentz::omega_sp() const { return omega_p / std::sqrt(2.0); }
double DrudeLorentz::k_p() const { return omega_p / phys::c; }

void DrudeLorentz::validate() const {
    if (!(omega_p > 0.0)) throw DomainError("plasma frequency must be positive");
    if (gamma < 0.0) throw DomainError("damping must be non-negative");
    if (omega_0 < 0.0) throw DomainError("resonance frequency must be non-negative");
}

cplx permittivity(const DrudeLorentz& m, double omega) {
    m.validate();
    if (m.free_electron_limit()) {
        if (omega == 0.0) throw DomainError("free-electron permittivity is singular at omega = 0");
        // 0+ regularization kept infinitesimal: eps is real
        return 1.0 - m.omega_p * m.omega_p / (omega * omega);
    }
    const cplx den(m.omega_0 * m.omega_0 - omega * omega, -omega * m.gamma);
    if (den == cplx(0.0)) throw DomainError("permittivity pole at omega = omega_0");
    return 1.0 + m.omega_p * m.omega_p / den;
}

double permittivity_imag_axis(const DrudeLorentz& m, double zeta) {
    m.validate();
    const double den = m.omega_0 * m.omega_0 + zeta * m.gamma + zeta * zeta;
    if (den == 0.0) throw DomainError("permittivity is singular at zeta = 0");
    return 1.0 + m.omega_p * m.omega_p / den;
}

double ReciprocalVector::k0() const { return omega / phys::c; }
double ReciprocalVector::kpar() const { return std::hypot(kx, ky); }

cplx z_wavenumber(double omega, double kpar, cplx eps) {
    const double k0 = omega / phys::c;
    const cplx root = std::sqrt(k0 * k0 * eps - kpar * kpar);
    return {sgn(omega) * root.real(), root.imag()};
}

double norm(const Vec3c& a) {
    return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
}

namespace {

Vec3c cross(const Vec3c& a, const Vec3c& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3c scale(const Vec3c& a, cplx s) { return {a[0] * s, a[1] * s, a[2] * s}; }

} // namespace

PolarizationBasis polarization_basis(const ReciprocalVector& k, const ModeLabel& label, cplx eps) {
    const double sw = sgn(k.omega);
    const cplx K = z_wavenumber(k, eps);
    const Vec3c kv{k.kx, k.ky, double(label.sigma) * K};
    Vec3c es;
    if (k.kpar() == 0.0) {
        // k_y = 0, k_x -> 0+ limit
        es = {0.0, -sw, 0.0};
    } else {
        const Vec3c kz = cross(kv, Vec3c{0.0, 0.0, 1.0});
        es = scale(kz, sw / norm(kz));
    }
    const Vec3c kes = cross(kv, es);
    const double n = norm(kes);
    if (n == 0.0) throw DomainError("degenerate wavevector: k x e_s vanishes");
    const Vec3c ep = scale(kes, sw / n);
    return {es, ep, ep, scale(es, -1.0), kv};
}

cplx impedance(const ReciprocalVector& k, Pol lambda, cplx eps) {
    const cplx K = z_wavenumber(k, eps);
    const double k0 = std::abs(k.k0());
    const double kk = std::norm(K) + k.kpar() * k.kpar();
    if (lambda == Pol::s) {
        if (kk == 0.0) throw DomainError("impedance undefined for K = k_par = 0");
        return phys::Z0 * std::sqrt(k0 * k0 / kk);
    }
    if (eps == cplx(0.0)) throw DomainError("p impedance undefined for eps = 0");
    if (k0 == 0.0) throw DomainError("p impedance undefined for k_0 = 0");
    return phys::Z0 / eps * std::sqrt(kk / (k0 * k0));
}

Fresnel fresnel(const ReciprocalVector& k, cplx eps_v, cplx eps_m) {
    const cplx Kv = z_wavenumber(k, eps_v);
    const cplx Km = z_wavenumber(k, eps_m);
    const cplx ds = Km + Kv;
    const cplx dp = eps_v * Km + eps_m * Kv;
    if (ds == cplx(0.0) || dp == cplx(0.0)) throw PoleError("Fresnel denominator vanishes");
    return {(Km - Kv) / ds, (eps_v * Km - eps_m * Kv) / dp};
}

} // namespace msurf
