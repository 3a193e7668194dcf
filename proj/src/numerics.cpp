#include "metasurf/numerics.hpp"

#include "metasurf/error.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace msurf {

namespace {

using lcplx = std::complex<long double>;

// Power series sum_k (-z^2/4)^k / (k! (n+k)!) for n >= 0.
lcplx bessel_series_core(int n, cplx z, int order_for_error) {
    const lcplx w = lcplx(z) * lcplx(z) * -0.25L;
    long double nfact = 1.0L;
    for (int i = 2; i <= n; ++i) nfact *= i;
    lcplx term = 1.0L / nfact;
    lcplx sum = term;
    long double biggest = std::abs(term);
    const long double az = std::abs(z);
    for (int k = 1; k < 500; ++k) {
        term *= w / (static_cast<long double>(k) * static_cast<long double>(n + k));
        sum += term;
        biggest = std::max(biggest, std::abs(term));
        if (k > az && std::abs(term) <= 1e-21L * std::abs(sum)) break;
    }
    const long double lost = biggest * std::numeric_limits<long double>::epsilon();
    if (std::abs(sum) == 0.0L || lost > 1e-11L * std::abs(sum))
        throw BesselError(order_for_error, z, "series cancellation too severe");
    return sum;
}

bool is_real(cplx z) { return z.imag() == 0.0; }

} // namespace

cplx bessel_j(int n, cplx z) {
    if (n < 0) return (n % 2 == 0 ? 1.0 : -1.0) * bessel_j(-n, z);
    if (z == cplx(0.0)) return n == 0 ? 1.0 : 0.0;
    if (is_real(z)) {
        const double x = z.real();
        const double v = std::cyl_bessel_j(static_cast<double>(n), std::abs(x));
        return (x < 0 && n % 2 == 1) ? -v : v;
    }
    const lcplx half = lcplx(z) * 0.5L;
    const lcplx s = bessel_series_core(n, z, n);
    return cplx(std::pow(half, n) * s);
}

cplx bessel_j_over_arg(int n, cplx z) {
    if (n == 0) throw BesselError(0, z, "J_0(z)/z has no finite limit");
    if (n < 0) return (n % 2 == 0 ? 1.0 : -1.0) * bessel_j_over_arg(-n, z);
    if (std::abs(z) > 1e-3) return bessel_j(n, z) / z;
    // (z/2)^(n-1) / 2 * series
    const lcplx half = lcplx(z) * 0.5L;
    const lcplx s = bessel_series_core(n, z, n);
    return cplx(std::pow(half, n - 1) * s * 0.5L);
}

namespace quad {

namespace {

struct Workspace {
    explicit Workspace(int n) : w(gsl_integration_workspace_alloc(static_cast<size_t>(n))) {}
    ~Workspace() { gsl_integration_workspace_free(w); }
    gsl_integration_workspace* w;
};

double trampoline(double x, void* p) { return (*static_cast<const Fn*>(p))(x); }

struct HandlerOff {
    HandlerOff() { gsl_set_error_handler_off(); }
};
const HandlerOff handler_off;

void check(int status, double a, double b, double result, double abserr) {
    if (status == GSL_SUCCESS) return;
    // Roundoff-limited runs that still reached a tight estimate are accepted.
    if ((status == GSL_EROUND || status == GSL_EMAXITER) &&
        abserr <= 1e-8 * std::abs(result))
        return;
    throw ConvergenceError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] failed: " + gsl_strerror(status) + " (estimate " +
                           std::to_string(result) + " +- " + std::to_string(abserr) + ")");
}

} // namespace

double finite(const Fn& f, double a, double b, const Options& opt) {
    Workspace ws(opt.limit);
    gsl_function F{&trampoline, const_cast<Fn*>(&f)};
    double r = 0, e = 0;
    const int st = gsl_integration_qag(&F, a, b, opt.epsabs, opt.epsrel,
                                       static_cast<size_t>(opt.limit), GSL_INTEG_GAUSS41, ws.w,
                                       &r, &e);
    check(st, a, b, r, e);
    return r;
}

double singular(const Fn& f, double a, double b, const Options& opt) {
    Workspace ws(opt.limit);
    gsl_function F{&trampoline, const_cast<Fn*>(&f)};
    double r = 0, e = 0;
    const int st = gsl_integration_qags(&F, a, b, opt.epsabs, opt.epsrel,
                                        static_cast<size_t>(opt.limit), ws.w, &r, &e);
    check(st, a, b, r, e);
    return r;
}

double semi_infinite(const Fn& f, double a, const Options& opt) {
    Workspace ws(opt.limit);
    gsl_function F{&trampoline, const_cast<Fn*>(&f)};
    double r = 0, e = 0;
    const int st = gsl_integration_qagiu(&F, a, opt.epsabs, opt.epsrel,
                                         static_cast<size_t>(opt.limit), ws.w, &r, &e);
    check(st, a, std::numeric_limits<double>::infinity(), r, e);
    return r;
}

} // namespace quad

double bisect(const std::function<double(double)>& f, double a, double b, double rtol,
              int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw BracketError("no sign change on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    for (int i = 0; i < max_iter; ++i) {
        const double m = 0.5 * (a + b);
        if (std::abs(b - a) <= rtol * std::abs(m) || m == a || m == b) return m;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    throw ConvergenceError("bisection did not converge");
}

} // namespace msurf
