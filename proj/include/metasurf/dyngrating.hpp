#pragma once

#include "metasurf/em_core.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace msurf {

using VecX = Eigen::VectorXcd;
using MatX = Eigen::MatrixXcd;

struct Incidence {
    double omega = 0.0;       // rad/s
    double theta = 0.0;       // rad, measured from the z axis in the upper medium
    Pol pol = Pol::s;
    double amplitude = 1.0;   // V/m
};

// Travelling-wave boundary z = A sin(g x - Omega t) between eps_above (z > a)
// and eps_below (z < a), harmonics m in [-m_c, m_c].
struct GratingConfig {
    double A = 0.0;
    double g = 0.0;
    double Omega = 0.0;
    cplx eps_above{1.0, 0.0};
    cplx eps_below{2.25, 0.0};
    int m_c = 3;
    Incidence incidence;

    int size() const { return 2 * m_c + 1; }
    double kx() const;
    double v_ph() const { return Omega / g; }
    cplx alpha() const { return eps_below - eps_above; }
    ReciprocalVector replica(int m) const;
    void validate() const;
};

// omega_m = 0 with k_x,m != 0. Such a harmonic carries no E (s) or no H (p); the
// solver works with the amplitude scaled by k_par / |k_0| so the system stays finite.
bool static_replica(const GratingConfig& cfg, int m);

struct FloquetAmplitudes {
    int m_c = 0;
    VecX amp;
    ModeLabel label;

    cplx at(int m) const { return amp(m + m_c); }
    double intensity(int m) const { return std::norm(at(m)); }
};

struct BoundaryGeometry {
    double a, a_x, a_t, eta;
    std::array<double, 3> t1, t2, n;
};

BoundaryGeometry boundary_geometry(const GratingConfig& cfg, double x, double t);

// Coefficient matrices for the three channels: incident (-,>), reflected
// (+,>), transmitted (-,<). For p polarization N holds N/eps (N-tilde) and
// L the moving-boundary term entering the M row.
struct CoefficientMatrices {
    MatX M_inc, N_inc;
    MatX M_ref, N_ref;
    MatX M_tra, N_tra;
    MatX L;
    MatX L_aux;   // optional extra term in the N row (p polarization); empty if unused
};

// Moving-boundary term for p polarization. derived: (A Omega alpha / 2c) *
// (Nt_{l-1,m} + Nt_{l+1,m}) from the jump n x [H] = -v_n [D]_t.
// printed: (A Omega alpha / c) (N_{l-1,m} + N_{l+1,m}) with N = eps_below Nt.
enum class LTildeForm { derived, printed };

CoefficientMatrices build_matrices_s(const GratingConfig& cfg);
CoefficientMatrices build_matrices_p(const GratingConfig& cfg, LTildeForm form = LTildeForm::derived);

struct DiffractionResult {
    Pol pol = Pol::s;
    // Electric-amplitude response matrices (columns: incident harmonic).
    MatX R, T;
    // Magnetic-amplitude forms (p polarization only).
    MatX R_h, T_h;
    FloquetAmplitudes reflected, transmitted;   // electric amplitudes
    VecX reflected_h, transmitted_h;            // magnetic amplitudes (p)
    double condition = 1.0;
};

// Block solve of the boundary conditions; throws SingularSystemError when the
// estimated condition number exceeds max_condition.
DiffractionResult solve_diffraction_s(const GratingConfig& cfg, double max_condition = 1e12);
DiffractionResult solve_diffraction_p(const GratingConfig& cfg, double max_condition = 1e12,
                                      LTildeForm form = LTildeForm::derived);
DiffractionResult solve_diffraction(const GratingConfig& cfg, double max_condition = 1e12);

// Shared between the full and effective solvers.
DiffractionResult solve_block_system(const GratingConfig& cfg, const CoefficientMatrices& c,
                                     double max_condition);

// Smallest |K_m| over harmonics and both media, relative to the replica's
// wavevector scale; zero on a Wood anomaly. Static replicas (omega_m = k_m = 0)
// are skipped. harmonic receives the offending index.
double wood_distance(const GratingConfig& cfg, int* harmonic = nullptr);

// Incidence angles (rad, within [-pi/2, pi/2]) where order m grazes in either medium.
std::vector<double> wood_anomaly_angles(const GratingConfig& cfg, const std::vector<int>& orders);

// Outgoing z-flux of propagating orders over incident flux; 1 for a lossless
// static grating.
double flux_ratio(const GratingConfig& cfg, const DiffractionResult& r);

struct FieldOptions {
    double t = 0.0;
    bool exclude_static = false;   // drop harmonics with omega_m = 0 (DC background)
};

// |E|^2 on the grid, row-major [ix * nz + iz]. z >= a(x, t): incident +
// reflected; below: transmitted.
std::vector<double> reconstruct_fields(const GratingConfig& cfg, const DiffractionResult& r,
                                       const std::vector<double>& xs, const std::vector<double>& zs,
                                       const FieldOptions& opt = {});

// Complex field vector on one side of the boundary at (x, z, t).
std::array<cplx, 3> field_above(const GratingConfig& cfg, const DiffractionResult& r, double x, double z,
                                const FieldOptions& opt = {});
std::array<cplx, 3> field_below(const GratingConfig& cfg, const DiffractionResult& r, double x, double z,
                                const FieldOptions& opt = {});

// atan sqrt(v^2 eps / c^2 - 1); empty below threshold.
std::optional<double> cerenkov_angle(double v_ph, double eps);

// Propagation angle atan(Re K_m / k_x,m) of harmonic m in the given medium,
// empty when evanescent.
std::optional<double> harmonic_angle(const GratingConfig& cfg, int m, bool below);

} // namespace msurf
