#pragma once

#include "metasurf/em_core.hpp"

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

namespace msurf {

using Mat2 = Eigen::Matrix2cd;

// Transfer matrix in the (+, -) amplitude basis. The physical matrix is
// exp(log_scale) * m; log_scale stays 0 unless a strongly evanescent film
// would overflow double precision.
struct TransferMatrix2 {
    Mat2 m = Mat2::Identity();
    double log_scale = 0.0;

    Mat2 value() const;
};

struct ScatteringMatrix2 {
    Mat2 s;
};

struct FilmStack {
    cplx eps_v{1.0, 0.0};
    cplx eps_m{1.0, 0.0};
    cplx eps_i{1.0, 0.0};
    double d = 0.0;
};

// Matching matrix relating (H+ or E+, H- or E-) amplitudes to tangential fields.
Mat2 matching_matrix(const ReciprocalVector& k, cplx eps, Pol lambda);
// diag(exp(i phi+), exp(i phi-)), phi = sigma K d/2
Mat2 propagation_matrix(const ReciprocalVector& k, cplx eps, double d);

TransferMatrix2 interface_transfer(const ReciprocalVector& k, cplx eps_from, cplx eps_to, Pol lambda);
TransferMatrix2 film_transfer(const FilmStack& stack, const ReciprocalVector& k, Pol lambda);

ScatteringMatrix2 scattering_from_transfer(const TransferMatrix2& t);

// xi^{ab} = -(K^a/eps^a) / (K^b/eps^b)
cplx xi(double omega, double kpar, cplx eps_a, cplx eps_b);

// Explicit single-interface SPP branches for eps_v = 1 (free-electron metal).
std::pair<double, double> spp_single_explicit(double kpar, const DrudeLorentz& model);
// |xi^{mv} - 1| at (omega, kpar); zero on the SPP dispersion.
double spp_single_residual(double omega, double kpar, const DrudeLorentz& model, double eps_v = 1.0);
// |K^v + K^m| / (|K^v| + |K^m|): TE bound-state condition, never zero.
double te_mode_residual(double omega, double kpar, const DrudeLorentz& model, double eps_v = 1.0);

enum class Parity { even, odd };

struct FilmRoot {
    double omega;
    Parity parity;
};

struct FilmSpec {
    double eps_v = 1.0;
    double eps_i = 1.0;
    double d = 0.0;
};

enum class Regime { retarded, quasistatic };

// Film-mode residual (1-xi^{mv})/(1+xi^{mv}) (1-xi^{mi})/(1+xi^{mi}) - exp(-2 Im K^m d).
double film_residual(double omega, double kpar, const FilmSpec& film, const DrudeLorentz& model,
                     Regime regime = Regime::retarded);
// Symmetric film branch: (1-xi)/(1+xi) - branch * exp(-Im K^m d), branch = +-1.
double film_residual_symmetric(double omega, double kpar, const FilmSpec& film,
                               const DrudeLorentz& model, int branch,
                               Regime regime = Regime::retarded);

// Upper end of the frequency window where K^m, K^v, K^i are purely imaginary.
double film_search_limit(double kpar, const FilmSpec& film, const DrudeLorentz& model,
                         Regime regime = Regime::retarded);

std::vector<FilmRoot> film_dispersion_solve(const FilmSpec& film, double kpar,
                                            const DrudeLorentz& model,
                                            Regime regime = Regime::retarded);

struct QuasistaticPair {
    double even;
    double odd;
};

// omega_sp sqrt(1 -+ exp(-kpar d))
QuasistaticPair quasistatic_film_modes(double kpar, double d, double omega_sp);

// Quasistatic film modes for cladding eps_v above, eps_i below, in units of
// omega_p, as functions of u = kpar d.
QuasistaticPair quasistatic_film_modes_general(double u, double eps_v, double eps_i);

} // namespace msurf
