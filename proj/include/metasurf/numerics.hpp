#pragma once

#include <complex>
#include <functional>

namespace msurf {

using cplx = std::complex<double>;

// sgn(0) := +1
inline double sgn(double x) { return x >= 0.0 ? 1.0 : -1.0; }

// Integer-order Bessel function of the first kind for complex argument.
cplx bessel_j(int n, cplx z);

// J_n(z)/z, continuous through z = 0. Undefined (throws) for n = 0.
cplx bessel_j_over_arg(int n, cplx z);

namespace quad {

struct Options {
    double epsabs = 0.0;
    double epsrel = 1e-10;
    int limit = 2000;
};

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a, b].
double finite(const Fn& f, double a, double b, const Options& opt = {});
// [a, b] with endpoint singularities (Wynn extrapolation).
double singular(const Fn& f, double a, double b, const Options& opt = {});
// [a, +inf).
double semi_infinite(const Fn& f, double a, const Options& opt = {});

} // namespace quad

// Bisection on a sign change of f in [a, b]. rtol relative to |root|.
double bisect(const std::function<double(double)>& f, double a, double b, double rtol = 1e-12,
              int max_iter = 400);

} // namespace msurf
