#pragma once

#include "metasurf/dyngrating.hpp"

namespace msurf {

// Flat, space-time-varying sheet eps_sf = eps_bar (1 + 2i delta_eps sin(q.x)).
struct EffectiveSurface {
    cplx eps_bar;     // (eps< + eps>) A, permittivity times length
    cplx delta_eps;   // (eps< - eps>) / (2i (eps< + eps>))

    static EffectiveSurface from(const GratingConfig& cfg);
};

// sheet: the strip's excess polarization (eps< - eps>) a(x, t) acts as a
// source on the flat interface; for p polarization the normal (D_z) part is
// included. literal: the tridiagonal starred matrix with the eps_bar k_0
// diagonal, kept for reference.
enum class EffectiveForm { sheet, literal };

// M*, N* are the flat-interface (diagonal) matrices; L carries the sheet.
CoefficientMatrices build_matrices_effective(const GratingConfig& cfg, Pol lambda,
                                             EffectiveForm form = EffectiveForm::sheet);

DiffractionResult solve_effective(const GratingConfig& cfg, EffectiveForm form = EffectiveForm::sheet,
                                  double max_condition = 1e12);

} // namespace msurf
