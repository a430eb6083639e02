#pragma once

#include <stdexcept>
#include <string>

namespace huygens {

// Base class for every error raised by the library core.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic attempted between an exact and a floating Scalar.
struct ModeMismatchError : Error {
    using Error::Error;
};

// Division by a function that is identically zero.
struct DivisionByZeroError : Error {
    using Error::Error;
};

// A numeric evaluation hit a denominator below the guard threshold.
// Carries the offending denominator magnitude and, when known, the
// angular distance to the nearest detected zero line.
struct NearSingularError : Error {
    double denominator_magnitude = 0.0;
    double angular_distance = -1.0;  // < 0 means "not computed"

    NearSingularError(const std::string& msg, double den_mag, double ang_dist = -1.0)
        : Error(msg), denominator_magnitude(den_mag), angular_distance(ang_dist) {}
};

// Polar-coordinate evaluation requested at (or too close to) the origin.
struct OriginError : Error {
    using Error::Error;
};

// The full Wronskian of the basis functions is identically zero.
struct DegenerateWronskianError : Error {
    using Error::Error;
};

// Heat-kernel evaluation with t <= 0.
struct NonPositiveTimeError : Error {
    using Error::Error;
};

// Invalid argument (index out of range, malformed input datum, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

// Malformed serialized input (canonical text or JSON configuration).
struct ParseError : Error {
    using Error::Error;
};

// The integration segment of the numeric transport oracle passes too close
// to a zero line of the Wronskian.
struct SingularRayError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to reach its tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

}  // namespace huygens
