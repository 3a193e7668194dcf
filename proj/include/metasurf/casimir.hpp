#pragma once

#include "metasurf/em_core.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace msurf {

// Reflection amplitudes at imaginary frequency omega = i zeta.
struct ReflectionPair {
    double r_s = 0.0;
    double r_p = 0.0;
};
using ReflectFn = std::function<ReflectionPair(double zeta, double kpar)>;

// Two identical half-spaces across a vacuum gap d, zero temperature:
// U = hbar/(4 pi^2) sum_lambda int dzeta int k dk ln(1 - r^2 exp(-2 kappa d)).
double lifshitz_energy_per_area(double d, const ReflectFn& reflect);

ReflectFn perfect_mirror_reflection();
ReflectFn drude_reflection(const DrudeLorentz& metal);

// Quasistatic plasmon shift for a free-standing film, per area.
// expanded = true: integrand truncated at second order in exp(-kd), giving
// -pi hbar omega_sp / (32 d^2); false: full square roots.
double quasistatic_delta_u(double d, double omega_sp, bool expanded);
// Same quantity written as an imaginary-axis log integral.
double quasistatic_delta_u_lifshitz(double d, double omega_p);

// (area / 2 pi) k
double mode_density(double kpar, double area);

struct FilmMaterial {
    double omega_p = 0.0;     // rad/s
    double gamma_sf = 0.0;    // J/m^2

    static FilmMaterial mercury();
    void validate() const;
};

struct CorrugationProfile {
    double A = 0.0;
    double lambda = 0.0;

    double operator()(double x) const;
    void validate() const;
};

// G = int_0^inf (W_odd + W_even - W_inf) u du, W in units of omega_p,
// quasistatic film with cladding eps_v = 1 above and eps_i below.
double zero_point_kernel(double eps_i, double eps_v = 1.0);

// Quasistatic zero-point energy of the corrugated film per unit depth,
// summed over N flat blocks of one period (PFA).
double pfa_energy(const CorrugationProfile& profile, double d, const FilmMaterial& material,
                  double eps_i, int blocks = 256);
double pfa_delta_energy(const CorrugationProfile& profile, double d, const FilmMaterial& material,
                        double eps_i, int blocks = 256);

// Second-order coefficients, d^2/dA^2 of the energy per unit area.
double gamma_sp2(double d, const FilmMaterial& material, double eps_i);
// Closed-form integral as quoted for the free-standing film.
double gamma_sp2_closed_form(double d, double omega_sp);
// Per unit depth L of one period: 2 pi^2 gamma_sf / lambda.
double gamma_sf2(double lambda, double gamma_sf);
// gamma_sp2 + gamma_sf2 / lambda
double stability_total(double d, double lambda, const FilmMaterial& material, double eps_i);

struct StabilityGrid {
    std::vector<double> d_axis;
    std::vector<double> lambda_axis;
    std::vector<double> gamma_total;   // row-major, index i_d * n_lambda + j_lambda
    double eps_i = 1.0;

    double at(std::size_t i_d, std::size_t j_lambda) const {
        return gamma_total[i_d * lambda_axis.size() + j_lambda];
    }
};

struct ContourPoint {
    double lambda;
    std::optional<double> d_critical;   // empty: no sign change in the d range
};

struct StabilityMap {
    StabilityGrid grid;
    std::vector<ContourPoint> contour;
};

StabilityMap stability_map(const std::vector<double>& d_axis, const std::vector<double>& lambda_axis,
                           const FilmMaterial& material, double eps_i, unsigned workers = 0);

} // namespace msurf
