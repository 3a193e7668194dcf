#include "metasurf/radiate.hpp"

#include "metasurf/constants.hpp"
#include "metasurf/error.hpp"

#include <cmath>
#include <limits>

namespace msurf {

void SwiftCharge::validate() const {
    if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("beta must lie in (0, 1]");
    if (!(n > 0.0)) throw DomainError("refractive index must be positive");
    if (!std::isfinite(charge)) throw DomainError("charge must be finite");
}

double frank_tamm_spectral_power(const SwiftCharge& q, double omega) {
    q.validate();
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    const double bn = q.beta * q.n;
    if (bn <= 1.0) return 0.0;
    return phys::mu0 * q.charge * q.charge * omega / (4.0 * phys::pi) * (1.0 - 1.0 / (bn * bn));
}

std::optional<double> cerenkov_angle_particle(const SwiftCharge& q) {
    q.validate();
    const double x = (q.beta * q.n) * (q.beta * q.n) - 1.0;
    if (x < -4.0 * std::numeric_limits<double>::epsilon()) return std::nullopt;
    return std::atan(std::sqrt(std::max(x, 0.0)));
}

} // namespace msurf
