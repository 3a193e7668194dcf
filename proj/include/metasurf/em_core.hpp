#pragma once

#include "metasurf/numerics.hpp"

#include <array>
#include <complex>

namespace msurf {

using Vec3c = std::array<cplx, 3>;

enum class Pol { s, p };

// Drude-Lorentz response eps(w) = 1 + wp^2 / (w0^2 - i w gamma - w^2).
struct DrudeLorentz {
    double omega_0 = 0.0;
    double gamma = 0.0;
    double omega_p = 0.0;

    static DrudeLorentz free_electron(double omega_p) { return {0.0, 0.0, omega_p}; }

    double omega_sp() const;
    double k_p() const;
    bool free_electron_limit() const { return omega_0 == 0.0 && gamma == 0.0; }
    void validate() const;
};

cplx permittivity(const DrudeLorentz& model, double omega);
// Response at imaginary frequency w = i zeta; real for zeta > 0.
double permittivity_imag_axis(const DrudeLorentz& model, double zeta);

// k = (k_x, k_y, i k_0) with k_0 = omega / c.
struct ReciprocalVector {
    double kx = 0.0;
    double ky = 0.0;
    double omega = 0.0;

    double k0() const;
    double kpar() const;
    // k_m = k + m q, q = (g, 0, -i Omega / c)
    ReciprocalVector replica(int m, double g, double Omega) const {
        return {kx + m * g, ky, omega + m * Omega};
    }
};

struct ModeLabel {
    int sigma = +1;   // +1: along +z, -1: along -z
    Pol lambda = Pol::s;
};

struct Medium {
    cplx eps{1.0, 0.0};
};

// K = sgn(w) Re sqrt(w^2 eps / c^2 - kpar^2) + i Im sqrt(...)
cplx z_wavenumber(double omega, double kpar, cplx eps);
inline cplx z_wavenumber(const ReciprocalVector& k, cplx eps) {
    return z_wavenumber(k.omega, k.kpar(), eps);
}

struct PolarizationBasis {
    Vec3c e_s, e_p, h_s, h_p;
    Vec3c wavevector;   // (k_x, k_y, sigma K)
};

PolarizationBasis polarization_basis(const ReciprocalVector& k, const ModeLabel& label, cplx eps);

cplx impedance(const ReciprocalVector& k, Pol lambda, cplx eps);

struct Fresnel {
    cplx r_s, r_p;
};

Fresnel fresnel(const ReciprocalVector& k, cplx eps_v, cplx eps_m);

// Complex bilinear dot product (no conjugation).
inline cplx dot(const Vec3c& a, const Vec3c& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
double norm(const Vec3c& a);

} // namespace msurf
