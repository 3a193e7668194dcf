#include "metasurf/casimir.hpp"

#include "metasurf/constants.hpp"
#include "metasurf/error.hpp"
#include "metasurf/layered.hpp"
#include "metasurf/parallel.hpp"

#include <cmath>

namespace msurf {

using phys::hbar;
using phys::pi;

double lifshitz_energy_per_area(double d, const ReflectFn& reflect) {
    if (!(d > 0.0)) throw DomainError("gap must be positive");
    // dimensionless x = k d, y = zeta d / c
    const double zscale = phys::c / d;
    auto inner = [&](double y) {
        auto f = [&](double x) {
            const double kappa = std::sqrt(x * x + y * y);
            const double e = std::exp(-2.0 * kappa);
            const ReflectionPair r = reflect(y * zscale, x / d);
            return x * (std::log1p(-r.r_s * r.r_s * e) + std::log1p(-r.r_p * r.r_p * e));
        };
        return quad::semi_infinite(f, 0.0, {0.0, 1e-9, 2000});
    };
    // the y = 0 edge carries a log singularity for perfect reflection
    const double head = quad::singular(inner, 0.0, 1.0, {0.0, 1e-8, 2000});
    const double tail = quad::semi_infinite(inner, 1.0, {0.0, 1e-8, 2000});
    return hbar / (4.0 * pi * pi) * (head + tail) * zscale / (d * d);
}

ReflectFn perfect_mirror_reflection() {
    return [](double, double) { return ReflectionPair{-1.0, 1.0}; };
}

ReflectFn drude_reflection(const DrudeLorentz& metal) {
    metal.validate();
    return [metal](double zeta, double k) {
        const double em = permittivity_imag_axis(metal, zeta);
        const double q = zeta / phys::c;
        const double kv = std::sqrt(k * k + q * q);
        const double km = std::sqrt(k * k + em * q * q);
        return ReflectionPair{(kv - km) / (kv + km), (em * kv - km) / (em * kv + km)};
    };
}

double quasistatic_delta_u(double d, double omega_sp, bool expanded) {
    if (!(d > 0.0)) throw DomainError("thickness must be positive");
    double integral;
    if (expanded) {
        integral = quad::semi_infinite([](double u) { return -u * std::exp(-2.0 * u) / 8.0; }, 0.0,
                                       {0.0, 1e-12, 2000});
    } else {
        integral = quad::semi_infinite(
            [](double u) {
                const double e = std::exp(-u);
                // sqrt(1+e) + sqrt(1-e) - 2 without cancellation
                const double a = std::sqrt(1.0 + e), b = std::sqrt(1.0 - e);
                const double s = a + b;
                return u * (s * s - 4.0) / (s + 2.0);
            },
            0.0, {0.0, 1e-12, 2000});
    }
    return 0.5 * hbar * omega_sp * 2.0 * pi * integral / (d * d);
}

double quasistatic_delta_u_lifshitz(double d, double omega_p) {
    if (!(d > 0.0)) throw DomainError("thickness must be positive");
    // zeta in units of omega_p, u = k d
    auto inner = [](double u) {
        const double e = std::exp(-2.0 * u);
        auto f = [e](double z) {
            const double r = 1.0 / (2.0 * z * z + 1.0);
            return std::log1p(-r * r * e);
        };
        return u * quad::semi_infinite(f, 0.0, {0.0, 1e-11, 2000});
    };
    const double integral = quad::semi_infinite(inner, 0.0, {0.0, 1e-10, 2000});
    return hbar * omega_p * integral / (d * d);
}

double mode_density(double kpar, double area) {
    if (kpar < 0.0) throw DomainError("k_par must be non-negative");
    return area / (2.0 * pi) * kpar;
}

FilmMaterial FilmMaterial::mercury() { return {6.83 * phys::eV_to_rad_s, 27.6 * phys::meV_per_A2}; }

void FilmMaterial::validate() const {
    if (!(omega_p > 0.0)) throw DomainError("plasma frequency must be positive");
    if (!(gamma_sf > 0.0)) throw DomainError("surface tension must be positive");
}

double CorrugationProfile::operator()(double x) const { return A * std::sin(2.0 * pi * x / lambda); }

void CorrugationProfile::validate() const {
    if (A < 0.0) throw DomainError("corrugation amplitude must be non-negative");
    if (!(lambda > 0.0)) throw DomainError("corrugation period must be positive");
}

double zero_point_kernel(double eps_i, double eps_v) {
    if (!(eps_i > 0.0) || !(eps_v > 0.0)) throw DomainError("cladding permittivities must be positive");
    const double w_inf = 1.0 / std::sqrt(1.0 + eps_v) + 1.0 / std::sqrt(1.0 + eps_i);
    auto f = [&](double u) {
        if (u == 0.0) return 0.0;
        const QuasistaticPair w = quasistatic_film_modes_general(u, eps_v, eps_i);
        return u * (w.odd + w.even - w_inf);
    };
    return quad::semi_infinite(f, 0.0, {0.0, 1e-11, 2000});
}

namespace {

double pfa_sum(const CorrugationProfile& p, double d, double prefactor, int n) {
    // blocks i and n - i carry opposite offsets; pairing them keeps U(A) == U(-A) bitwise
    auto f = [&](double h) { return 1.0 / (h * h); };
    double sum = f(d);
    if (n % 2 == 0) sum += f(d);   // i = n/2: sin(pi) is zero
    for (int i = 1; 2 * i < n; ++i) {
        const double s = p.A * std::sin(2.0 * pi * i / n);
        sum += f(d + s) + f(d - s);
    }
    return prefactor * (p.lambda / n) * sum;
}

} // namespace

double pfa_energy(const CorrugationProfile& profile, double d, const FilmMaterial& material, double eps_i,
                  int blocks) {
    if (blocks < 64) throw DomainError("PFA needs at least 64 blocks");
    if (!(d > 0.0)) throw DomainError("thickness must be positive");
    if (!(profile.lambda > 0.0)) throw DomainError("corrugation period must be positive");
    if (!(std::abs(profile.A) < d)) throw DomainError("PFA requires |A| < d");
    if (!(material.omega_p > 0.0)) throw DomainError("plasma frequency must be positive");
    const double pref = 0.5 * hbar * material.omega_p * zero_point_kernel(eps_i);
    const double u1 = pfa_sum(profile, d, pref, blocks);
    const double u2 = pfa_sum(profile, d, pref, 2 * blocks);
    if (std::abs(u1 - u2) > 1e-3 * std::abs(u2))
        throw ConvergenceError("PFA block sum not converged between N and 2N");
    return u2;
}

double pfa_delta_energy(const CorrugationProfile& profile, double d, const FilmMaterial& material,
                        double eps_i, int blocks) {
    CorrugationProfile flat = profile;
    flat.A = 0.0;
    return pfa_energy(profile, d, material, eps_i, blocks) - pfa_energy(flat, d, material, eps_i, blocks);
}

double gamma_sp2(double d, const FilmMaterial& material, double eps_i) {
    if (!(d > 0.0)) throw DomainError("thickness must be positive");
    const double d2 = d * d;
    return 1.5 * hbar * material.omega_p * zero_point_kernel(eps_i) / (d2 * d2);
}

double gamma_sp2_closed_form(double d, double omega_sp) {
    if (!(d > 0.0)) throw DomainError("thickness must be positive");
    auto f = [](double u) {
        if (u == 0.0) return 0.0;
        const double e = std::exp(-u);
        const double om = -std::expm1(-u);
        return u * u * u * (e / (2.0 * om) + 1.0) * e / (2.0 * std::sqrt(om));
    };
    const double I = quad::semi_infinite(f, 0.0, {0.0, 1e-11, 2000});
    const double d2 = d * d;
    return -0.5 * hbar * omega_sp * I / (d2 * d2);
}

double gamma_sf2(double lambda, double gamma_sf) {
    if (!(lambda > 0.0)) throw DomainError("corrugation period must be positive");
    return 2.0 * pi * pi * gamma_sf / lambda;
}

double stability_total(double d, double lambda, const FilmMaterial& material, double eps_i) {
    return gamma_sp2(d, material, eps_i) + gamma_sf2(lambda, material.gamma_sf) / lambda;
}

StabilityMap stability_map(const std::vector<double>& d_axis, const std::vector<double>& lambda_axis,
                           const FilmMaterial& material, double eps_i, unsigned workers) {
    material.validate();
    auto check_axis = [](const std::vector<double>& v, const char* name) {
        if (v.size() < 2) throw DomainError(std::string(name) + " axis needs at least two samples");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!(v[i] > 0.0)) throw DomainError(std::string(name) + " axis must be positive");
            if (i > 0 && !(v[i] > v[i - 1])) throw DomainError(std::string(name) + " axis must increase");
        }
    };
    check_axis(d_axis, "d");
    check_axis(lambda_axis, "lambda");

    // gamma_sp2 = C / d^4 with C independent of d and lambda
    const double C = 1.5 * hbar * material.omega_p * zero_point_kernel(eps_i);
    auto total = [&](double d, double lam) {
        const double d2 = d * d;
        return C / (d2 * d2) + gamma_sf2(lam, material.gamma_sf) / lam;
    };

    StabilityMap out;
    out.grid.d_axis = d_axis;
    out.grid.lambda_axis = lambda_axis;
    out.grid.eps_i = eps_i;
    const std::size_t nd = d_axis.size(), nl = lambda_axis.size();
    out.grid.gamma_total.assign(nd * nl, 0.0);
    parallel_for(
        nd * nl, [&](std::size_t idx) { out.grid.gamma_total[idx] = total(d_axis[idx / nl], lambda_axis[idx % nl]); },
        workers);

    out.contour.resize(nl);
    for (std::size_t j = 0; j < nl; ++j) {
        const double lam = lambda_axis[j];
        out.contour[j].lambda = lam;
        // scan from large d down; the last sign change met is the one at the largest d
        for (std::size_t i = nd - 1; i > 0; --i) {
            const double a = out.grid.at(i - 1, j), b = out.grid.at(i, j);
            if (b == 0.0) {
                out.contour[j].d_critical = d_axis[i];
                break;
            }
            if ((a < 0.0) != (b < 0.0) || a == 0.0) {
                if (a == 0.0) {
                    out.contour[j].d_critical = d_axis[i - 1];
                } else {
                    out.contour[j].d_critical =
                        bisect([&](double d) { return total(d, lam); }, d_axis[i - 1], d_axis[i], 1e-4);
                }
                break;
            }
        }
    }
    return out;
}

} // namespace msurf
