#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace msurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Denominator vanishes (pole of a response function, bound-state condition).
struct PoleError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct BracketError : Error {
    using Error::Error;
};

struct BesselError : Error {
    BesselError(int order, std::complex<double> arg, const std::string& why)
        : Error("Bessel J_" + std::to_string(order) + "(" + std::to_string(arg.real()) + "+" +
                std::to_string(arg.imag()) + "i): " + why),
          order(order), arg(arg) {}
    int order;
    std::complex<double> arg;
};

// Block system of the grating solver is numerically singular.
struct SingularSystemError : Error {
    SingularSystemError(int harmonic, double cond)
        : Error("near-singular grating system (cond ~ " + std::to_string(cond) +
                "), closest Wood anomaly at harmonic m = " + std::to_string(harmonic)),
          harmonic(harmonic), condition(cond) {}
    int harmonic;
    double condition;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace msurf
