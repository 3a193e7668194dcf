#include "metasurf/effective.hpp"

#include "metasurf/constants.hpp"

#include <cmath>

namespace msurf {

EffectiveSurface EffectiveSurface::from(const GratingConfig& cfg) {
    const cplx sum = cfg.eps_below + cfg.eps_above;
    return {sum * cfg.A, (cfg.eps_below - cfg.eps_above) / (cplx(0.0, 2.0) * sum)};
}

namespace {

// [a f]_l = (A / 2i)(f_{l-1} - f_{l+1})
MatX sheet_shift(const GratingConfig& cfg) {
    const int n = cfg.size();
    const cplx h = cfg.A / cplx(0.0, 2.0);
    MatX S = MatX::Zero(n, n);
    for (int l = 0; l < n; ++l) {
        if (l - 1 >= 0) S(l, l - 1) = h;
        if (l + 1 < n) S(l, l + 1) = -h;
    }
    return S;
}

MatX literal_star(const GratingConfig& cfg) {
    const int n = cfg.size(), mc = cfg.m_c;
    const EffectiveSurface s = EffectiveSurface::from(cfg);
    MatX L = MatX::Zero(n, n);
    for (int mi = 0; mi < n; ++mi) {
        const ReciprocalVector k = cfg.replica(mi - mc);
        const double w = sgn(k.omega) * sgn(k.kx);
        for (int li = std::max(0, mi - 1); li <= std::min(n - 1, mi + 1); ++li) {
            const double k0l = cfg.replica(li - mc).k0();
            L(li, mi) = s.eps_bar * (li == mi ? cplx(k0l) : s.delta_eps * k0l) * w;
        }
    }
    return L;
}

} // namespace

CoefficientMatrices build_matrices_effective(const GratingConfig& cfg, Pol lambda, EffectiveForm form) {
    GratingConfig flat = cfg;
    flat.A = 0.0;
    CoefficientMatrices c = lambda == Pol::s ? build_matrices_s(flat) : build_matrices_p(flat);
    cfg.validate();
    const int n = cfg.size(), mc = cfg.m_c;

    if (form == EffectiveForm::literal) {
        c.L = literal_star(cfg);
        if (lambda == Pol::p) {
            // L-tilde*: columns scaled by -K</|k_0| / eps<
            for (int mi = 0; mi < n; ++mi) {
                const ReciprocalVector k = cfg.replica(mi - mc);
                const cplx K = z_wavenumber(k.omega, std::abs(k.kx), cfg.eps_below);
                c.L.col(mi) *= -K / (static_replica(cfg, mi - mc) ? std::abs(k.kx) : std::abs(k.k0())) / cfg.eps_below;
            }
        } else {
            for (int mi = 0; mi < n; ++mi)
                if (static_replica(cfg, mi - mc)) c.L.col(mi).setZero();
        }
        return c;
    }

    const MatX S = sheet_shift(cfg);
    VecX wl(n), kxl(n), Q(n);
    for (int i = 0; i < n; ++i) {
        const ReciprocalVector k = cfg.replica(i - mc);
        wl(i) = k.omega / phys::c;
        kxl(i) = k.kx;
        // k_par / |k_0|, times the static-column scale |k_0| / k_par where omega = 0
        Q(i) = k.omega != 0.0 ? std::abs(k.kx) / std::abs(k.k0()) : (k.kx != 0.0 ? 1.0 : 0.0);
    }
    const cplx I(0.0, 1.0);
    const cplx alpha = cfg.alpha();
    if (lambda == Pol::s) {
        // H_x row: source -i (omega_l / c) alpha [a E_y]_l with E_y = -M T
        c.L = I * alpha * wl.asDiagonal() * (S * c.M_tra);
    } else {
        // H_y row: i (omega_l / c) alpha [a E_x]_l with E_x = N-tilde T
        c.L = I * alpha * wl.asDiagonal() * (S * c.N_tra);
        // E_x row: i k_x,l (1/eps< - 1/eps>) [a D_z]_l with D_z = -Q T
        const cplx de = 1.0 / cfg.eps_below - 1.0 / cfg.eps_above;
        c.L_aux = I * de * kxl.asDiagonal() * (S * (-Q).asDiagonal());
    }
    return c;
}

DiffractionResult solve_effective(const GratingConfig& cfg, EffectiveForm form, double max_condition) {
    return solve_block_system(cfg, build_matrices_effective(cfg, cfg.incidence.pol, form), max_condition);
}

} // namespace msurf
