#pragma once

#include <optional>

namespace msurf {

struct SwiftCharge {
    double charge = 1.602176634e-19;   // C
    double beta = 1.0;                 // v / c, in (0, 1]
    double n = 1.0;                    // refractive index

    void validate() const;
};

// Frank-Tamm integrand: power radiated per unit path per unit angular
// frequency, (mu0 q^2 omega / 4 pi)(1 - 1/(beta n)^2) above threshold.
double frank_tamm_spectral_power(const SwiftCharge& q, double omega);

// atan sqrt((beta n)^2 - 1); empty below threshold.
std::optional<double> cerenkov_angle_particle(const SwiftCharge& q);

} // namespace msurf
