#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/scalar.hpp"
#include "core/trigpoly2.hpp"

namespace huygens {

// Chebyshev polynomials of the first kind, T_N(cos t) = cos(N t), held as
// exact integer coefficient lists in ascending powers of z. The zero
// polynomial is the empty list.
std::vector<mpz_class> chebyshev_coeffs(unsigned N);

// nu-fold formal derivative of T_N; empty (zero) when nu > N.
std::vector<mpz_class> chebyshev_derivative(unsigned N, unsigned nu);

// Horner evaluation over various coefficient carriers.
double chebyshev_eval(const std::vector<mpz_class>& coeffs, double z);
// Direct value T_N(z) through the three-term recurrence: numerically stable
// on [-1, 1], unlike monomial Horner whose 2^N-sized coefficients cost
// several digits at large N.
double chebyshev_value(unsigned N, double z);
Scalar chebyshev_eval(const std::vector<mpz_class>& coeffs, const Scalar& z);
// Substitutes a two-angle polynomial for z; used with z = cos(p - q).
TrigPoly2 chebyshev_eval(const std::vector<mpz_class>& coeffs, const TrigPoly2& z);

}  // namespace huygens
