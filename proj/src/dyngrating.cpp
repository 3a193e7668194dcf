#include "metasurf/dyngrating.hpp"

#include "metasurf/constants.hpp"
#include "metasurf/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace msurf {

double GratingConfig::kx() const {
    return std::sqrt(eps_above).real() * incidence.omega / phys::c * std::sin(incidence.theta);
}

ReciprocalVector GratingConfig::replica(int m) const {
    return ReciprocalVector{kx(), 0.0, incidence.omega}.replica(m, g, Omega);
}

void GratingConfig::validate() const {
    if (!(A >= 0.0)) throw DomainError("modulation depth A must be non-negative");
    if (!(g > 0.0)) throw DomainError("spatial frequency g must be positive");
    if (m_c < 1) throw DomainError("cutoff m_c must be at least 1");
    if (g * A > 0.5)
        throw DomainError("g A = " + std::to_string(g * A) +
                          " > 0.5: deep grating, the global boundary translation is not valid here; "
                          "use a local coordinate-distortion method");
    if (!(A * std::abs(Omega) < phys::c)) throw DomainError("boundary z-velocity A Omega must stay below c");
    if (eps_above == cplx(0.0) || eps_below == cplx(0.0)) throw DomainError("permittivities must be nonzero");
    if (!std::isfinite(incidence.omega) || !std::isfinite(incidence.theta))
        throw DomainError("incidence must be finite");
    if (std::abs(incidence.theta) >= phys::pi / 2) throw DomainError("|theta_in| must be below pi/2");
}

bool static_replica(const GratingConfig& cfg, int m) {
    const ReciprocalVector k = cfg.replica(m);
    return k.omega == 0.0 && k.kx != 0.0;
}

BoundaryGeometry boundary_geometry(const GratingConfig& cfg, double x, double t) {
    const double th = cfg.g * x - cfg.Omega * t;
    const double a = cfg.A * std::sin(th);
    const double ax = cfg.A * cfg.g * std::cos(th);
    const double at = -cfg.A * cfg.Omega * std::cos(th);
    const double eta = std::sqrt(1.0 + ax * ax);
    return {a, ax, at, eta, {1.0 / eta, 0.0, ax / eta}, {0.0, 1.0, 0.0}, {-ax / eta, 0.0, 1.0 / eta}};
}

namespace {

struct Column {
    double kx, omega, kpar;
    double r;      // k_x,m / k_par,m with the +1 convention at k_x,m = 0
    double sw;     // sgn(omega_m)
    cplx K;
    cplx a;        // sigma K / |k_0|
    double b;      // k_par / |k_0|
};

Column column(const GratingConfig& cfg, int m, int sigma, cplx eps) {
    const ReciprocalVector k = cfg.replica(m);
    Column c;
    c.kx = k.kx;
    c.omega = k.omega;
    c.kpar = std::abs(k.kx);
    c.r = sgn(k.kx);
    c.sw = sgn(k.omega);
    c.K = z_wavenumber(k.omega, c.kpar, eps);
    const double k0 = std::abs(k.omega) / phys::c;
    if (k0 == 0.0 && c.kpar != 0.0) {
        // static, modulated replica: column scaled by |k_0| / k_par, i.e. the unknown is
        // the amplitude times k_par / |k_0| (finite H for s, finite E for p)
        c.a = double(sigma) * c.K / c.kpar;
        c.b = 1.0;
        c.sw = 0.0;
    } else if (k0 == 0.0) {
        // static, uniform replica: K/|k_0| -> sqrt(eps), k_par/|k_0| -> 0
        c.a = double(sigma) * std::sqrt(eps);
        c.b = 0.0;
    } else {
        c.a = double(sigma) * c.K / k0;
        c.b = c.kpar / k0;
    }
    return c;
}

// J_n(phi) for n in [-2 m_c, 2 m_c], and J_n(phi)/phi for n != 0
struct BesselRow {
    int off;
    std::vector<cplx> j, jd;
    BesselRow(int mc, cplx phi) : off(2 * mc), j(4 * mc + 1), jd(4 * mc + 1) {
        for (int n = -off; n <= off; ++n) {
            j[n + off] = bessel_j(n, phi);
            jd[n + off] = n == 0 ? cplx(0.0) : bessel_j_over_arg(n, phi);
        }
    }
    cplx J(int n) const { return j[n + off]; }
    cplx Jd(int n) const { return jd[n + off]; }
};

void build_MN(const GratingConfig& cfg, int sigma, cplx eps, MatX& M, MatX& N) {
    const int n = cfg.size(), mc = cfg.m_c;
    M.setZero(n, n);
    N.setZero(n, n);
    for (int mi = 0; mi < n; ++mi) {
        const int m = mi - mc;
        const Column c = column(cfg, m, sigma, eps);
        const BesselRow B(mc, double(sigma) * c.K * cfg.A);
        for (int li = 0; li < n; ++li) {
            const int d = li - mi;
            M(li, mi) = c.r * c.sw * B.J(d);
            N(li, mi) = c.r * c.a * B.J(d);
            if (d != 0) N(li, mi) -= double(d) * cfg.g * cfg.A * B.Jd(d) * c.b;
        }
    }
}

} // namespace

CoefficientMatrices build_matrices_s(const GratingConfig& cfg) {
    cfg.validate();
    CoefficientMatrices c;
    build_MN(cfg, -1, cfg.eps_above, c.M_inc, c.N_inc);
    build_MN(cfg, +1, cfg.eps_above, c.M_ref, c.N_ref);
    build_MN(cfg, -1, cfg.eps_below, c.M_tra, c.N_tra);
    const int n = cfg.size(), mc = cfg.m_c;
    c.L.setZero(n, n);
    if (cfg.Omega == 0.0) return c;
    const cplx pref = cfg.alpha() / phys::c * cfg.Omega * cfg.A;
    for (int mi = 0; mi < n; ++mi) {
        const Column col = column(cfg, mi - mc, -1, cfg.eps_below);
        const BesselRow B(mc, -col.K * cfg.A);
        for (int li = 0; li < n; ++li) {
            const int d = li - mi;
            if (d != 0) c.L(li, mi) = pref * double(d) * B.Jd(d) * col.sw * col.r;
        }
    }
    return c;
}

CoefficientMatrices build_matrices_p(const GratingConfig& cfg, LTildeForm form) {
    cfg.validate();
    CoefficientMatrices c;
    build_MN(cfg, -1, cfg.eps_above, c.M_inc, c.N_inc);
    build_MN(cfg, +1, cfg.eps_above, c.M_ref, c.N_ref);
    build_MN(cfg, -1, cfg.eps_below, c.M_tra, c.N_tra);
    c.N_inc /= cfg.eps_above;
    c.N_ref /= cfg.eps_above;
    c.N_tra /= cfg.eps_below;
    const int n = cfg.size();
    c.L.setZero(n, n);
    if (cfg.Omega == 0.0) return c;
    const cplx pref = form == LTildeForm::derived
                          ? cfg.A * cfg.Omega * cfg.alpha() / (2.0 * phys::c)
                          : cfg.A * cfg.Omega * cfg.alpha() / phys::c * cfg.eps_below;
    for (int li = 0; li < n; ++li) {
        for (int mi = 0; mi < n; ++mi) {
            cplx s = 0.0;
            if (li - 1 >= 0) s += c.N_tra(li - 1, mi);
            if (li + 1 < n) s += c.N_tra(li + 1, mi);
            c.L(li, mi) = pref * s;
        }
    }
    return c;
}

double wood_distance(const GratingConfig& cfg, int* harmonic) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int m = -cfg.m_c; m <= cfg.m_c; ++m) {
        const ReciprocalVector k = cfg.replica(m);
        if (k.omega == 0.0 && k.kx == 0.0) continue;
        for (cplx eps : {cfg.eps_above, cfg.eps_below}) {
            const cplx K = z_wavenumber(k.omega, std::abs(k.kx), eps);
            const double scale = std::sqrt(std::abs(eps)) * std::abs(k.omega) / phys::c + std::abs(k.kx);
            const double dist = std::abs(K) / scale;
            if (dist < best) {
                best = dist;
                arg = m;
            }
        }
    }
    if (harmonic) *harmonic = arg;
    return best;
}

std::vector<double> wood_anomaly_angles(const GratingConfig& cfg, const std::vector<int>& orders) {
    std::vector<double> out;
    const double k = std::sqrt(cfg.eps_above).real() * cfg.incidence.omega / phys::c;
    if (k == 0.0) return out;
    for (int m : orders) {
        const double wm = std::abs(cfg.incidence.omega + m * cfg.Omega) / phys::c;
        for (cplx eps : {cfg.eps_above, cfg.eps_below}) {
            const double n = std::sqrt(eps).real();
            for (double s : {1.0, -1.0}) {
                const double v = (s * n * wm - m * cfg.g) / k;
                if (std::abs(v) <= 1.0) out.push_back(std::asin(v));
            }
        }
    }
    return out;
}

namespace {

// p impedances; for static modulated replicas the finite factor relating E to the
// scaled unknown
VecX impedances_p(const GratingConfig& cfg, cplx eps) {
    VecX z(cfg.size());
    for (int m = -cfg.m_c; m <= cfg.m_c; ++m) {
        const ReciprocalVector k = cfg.replica(m);
        ReciprocalVector kin{std::abs(k.kx), 0.0, k.omega};
        if (static_replica(cfg, m)) {
            const cplx K = z_wavenumber(kin, eps);
            z(m + cfg.m_c) = phys::Z0 / eps * std::sqrt(std::norm(K) + kin.kx * kin.kx) / kin.kx;
        } else {
            z(m + cfg.m_c) = impedance(kin, Pol::p, eps);
        }
    }
    return z;
}

} // namespace

DiffractionResult solve_block_system(const GratingConfig& cfg, const CoefficientMatrices& c, double max_condition) {
    const int n = cfg.size();
    const Pol pol = cfg.incidence.pol;
    MatX B(2 * n, 2 * n), rhs(2 * n, n);
    B.topLeftCorner(n, n) = c.M_ref;
    B.bottomLeftCorner(n, n) = c.N_ref;
    if (pol == Pol::s) {
        B.topRightCorner(n, n) = -c.M_tra;
        B.bottomRightCorner(n, n) = -(c.N_tra + c.L);
    } else {
        B.topRightCorner(n, n) = -(c.M_tra + c.L);
        B.bottomRightCorner(n, n) = -c.N_tra;
    }
    if (c.L_aux.size() != 0) B.bottomRightCorner(n, n) -= c.L_aux;
    rhs.topRows(n) = -c.M_inc;
    rhs.bottomRows(n) = -c.N_inc;

    // column equilibration: near-static replicas have columns ~ 1/|k_0|
    Eigen::VectorXd colscale(2 * n);
    for (int j = 0; j < 2 * n; ++j) {
        const double nj = B.col(j).cwiseAbs().maxCoeff();
        colscale(j) = nj > 0.0 ? 1.0 / nj : 1.0;
    }
    B = B * colscale.asDiagonal();
    Eigen::PartialPivLU<MatX> lu(B);
    const double rc = lu.rcond();
    const double cond = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(cond <= max_condition)) {
        int h = 0;
        wood_distance(cfg, &h);
        throw SingularSystemError(h, cond);
    }
    const MatX X = colscale.asDiagonal() * lu.solve(rhs);

    DiffractionResult r;
    r.pol = pol;
    r.condition = cond;
    VecX inc = VecX::Zero(n);
    const double Ein = cfg.incidence.amplitude;
    if (pol == Pol::s) {
        r.R = X.topRows(n);
        r.T = X.bottomRows(n);
        for (int m = -cfg.m_c; m <= cfg.m_c; ++m) {
            if (!static_replica(cfg, m)) continue;
            r.R.row(m + cfg.m_c).setZero();
            r.T.row(m + cfg.m_c).setZero();
        }
    } else {
        r.R_h = X.topRows(n);
        r.T_h = X.bottomRows(n);
        const VecX za = impedances_p(cfg, cfg.eps_above), zb = impedances_p(cfg, cfg.eps_below);
        const VecX zi = za.cwiseInverse();
        r.R = za.asDiagonal() * r.R_h * zi.asDiagonal();
        r.T = zb.asDiagonal() * r.T_h * zi.asDiagonal();
        for (int m = -cfg.m_c; m <= cfg.m_c; ++m) {
            if (!static_replica(cfg, m)) continue;
            r.R_h.row(m + cfg.m_c).setZero();
            r.T_h.row(m + cfg.m_c).setZero();
        }
        VecX hin = VecX::Zero(n);
        hin(cfg.m_c) = Ein / za(cfg.m_c);
        r.reflected_h = r.R_h * hin;
        r.transmitted_h = r.T_h * hin;
    }
    inc(cfg.m_c) = Ein;
    r.reflected = {cfg.m_c, r.R * inc, {+1, pol}};
    r.transmitted = {cfg.m_c, r.T * inc, {-1, pol}};
    return r;
}

DiffractionResult solve_diffraction_s(const GratingConfig& cfg, double max_condition) {
    GratingConfig c = cfg;
    c.incidence.pol = Pol::s;
    return solve_block_system(c, build_matrices_s(c), max_condition);
}

DiffractionResult solve_diffraction_p(const GratingConfig& cfg, double max_condition, LTildeForm form) {
    GratingConfig c = cfg;
    c.incidence.pol = Pol::p;
    return solve_block_system(c, build_matrices_p(c, form), max_condition);
}

DiffractionResult solve_diffraction(const GratingConfig& cfg, double max_condition) {
    return cfg.incidence.pol == Pol::s ? solve_diffraction_s(cfg, max_condition)
                                       : solve_diffraction_p(cfg, max_condition);
}

double flux_ratio(const GratingConfig& cfg, const DiffractionResult& r) {
    auto weight = [&](int m, cplx eps) {
        const ReciprocalVector k = cfg.replica(m);
        const cplx K = z_wavenumber(k.omega, std::abs(k.kx), eps);
        return r.pol == Pol::s ? K.real() : (K / eps).real();
    };
    double out = 0.0;
    for (int m = -cfg.m_c; m <= cfg.m_c; ++m) {
        const int i = m + cfg.m_c;
        if (r.pol == Pol::s) {
            out += weight(m, cfg.eps_above) * std::norm(r.reflected.amp(i)) +
                   weight(m, cfg.eps_below) * std::norm(r.transmitted.amp(i));
        } else {
            out += weight(m, cfg.eps_above) * std::norm(r.reflected_h(i)) +
                   weight(m, cfg.eps_below) * std::norm(r.transmitted_h(i));
        }
    }
    double in;
    if (r.pol == Pol::s) {
        in = weight(0, cfg.eps_above) * std::norm(cfg.incidence.amplitude);
    } else {
        const ReciprocalVector k = cfg.replica(0);
        const cplx z = impedance({std::abs(k.kx), 0.0, k.omega}, Pol::p, cfg.eps_above);
        in = weight(0, cfg.eps_above) * std::norm(cfg.incidence.amplitude / z);
    }
    return out / in;
}

namespace {

// Accumulates amplitude * e_lambda * exp(i (k_x x + sigma K z - omega t)).
void add_wave(const GratingConfig& cfg, int m, int sigma, cplx eps, Pol pol, cplx amp, double x, double z,
              double t, std::array<cplx, 3>& E) {
    const ReciprocalVector k = cfg.replica(m);
    const cplx K = z_wavenumber(k.omega, std::abs(k.kx), eps);
    const cplx ph = std::exp(cplx(0.0, 1.0) * (k.kx * x + double(sigma) * K * z - k.omega * t));
    if (pol == Pol::s) {
        E[1] += -sgn(k.omega) * sgn(k.kx) * amp * ph;
        return;
    }
    const PolarizationBasis b = polarization_basis(k, {sigma, Pol::p}, eps);
    for (int i = 0; i < 3; ++i) E[i] += amp * b.e_p[i] * ph;
}

bool skip(const GratingConfig& cfg, int m, const FieldOptions& opt) {
    return opt.exclude_static && cfg.replica(m).omega == 0.0;
}

} // namespace

std::array<cplx, 3> field_above(const GratingConfig& cfg, const DiffractionResult& r, double x, double z,
                                const FieldOptions& opt) {
    std::array<cplx, 3> E{};
    if (!skip(cfg, 0, opt)) add_wave(cfg, 0, -1, cfg.eps_above, r.pol, cfg.incidence.amplitude, x, z, opt.t, E);
    for (int m = -cfg.m_c; m <= cfg.m_c; ++m)
        if (!skip(cfg, m, opt)) add_wave(cfg, m, +1, cfg.eps_above, r.pol, r.reflected.at(m), x, z, opt.t, E);
    return E;
}

std::array<cplx, 3> field_below(const GratingConfig& cfg, const DiffractionResult& r, double x, double z,
                                const FieldOptions& opt) {
    std::array<cplx, 3> E{};
    for (int m = -cfg.m_c; m <= cfg.m_c; ++m)
        if (!skip(cfg, m, opt)) add_wave(cfg, m, -1, cfg.eps_below, r.pol, r.transmitted.at(m), x, z, opt.t, E);
    return E;
}

std::vector<double> reconstruct_fields(const GratingConfig& cfg, const DiffractionResult& r,
                                       const std::vector<double>& xs, const std::vector<double>& zs,
                                       const FieldOptions& opt) {
    std::vector<double> out(xs.size() * zs.size());
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
        const double a = boundary_geometry(cfg, xs[ix], opt.t).a;
        for (std::size_t iz = 0; iz < zs.size(); ++iz) {
            const auto E = zs[iz] >= a ? field_above(cfg, r, xs[ix], zs[iz], opt)
                                       : field_below(cfg, r, xs[ix], zs[iz], opt);
            out[ix * zs.size() + iz] = std::norm(E[0]) + std::norm(E[1]) + std::norm(E[2]);
        }
    }
    return out;
}

std::optional<double> cerenkov_angle(double v_ph, double eps) {
    if (v_ph < 0.0 || !(eps > 0.0)) throw DomainError("need v_ph >= 0 and eps > 0");
    const double x = v_ph * v_ph * eps / (phys::c * phys::c) - 1.0;
    if (x < -4.0 * std::numeric_limits<double>::epsilon()) return std::nullopt;
    return std::atan(std::sqrt(std::max(x, 0.0)));
}

std::optional<double> harmonic_angle(const GratingConfig& cfg, int m, bool below) {
    const ReciprocalVector k = cfg.replica(m);
    const cplx K = z_wavenumber(k.omega, std::abs(k.kx), below ? cfg.eps_below : cfg.eps_above);
    if (K.imag() != 0.0 || K.real() == 0.0) return std::nullopt;
    if (k.kx == 0.0) return phys::pi / 2;
    return std::atan(K.real() / k.kx);
}

} // namespace msurf
