#include <doctest.h>

#include <cmath>
#include <random>

#include "core/chebyshev.hpp"

using namespace huygens;

namespace {

bool coeffs_equal(const std::vector<mpz_class>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("base cases and the classic quartic") {
    CHECK(coeffs_equal(chebyshev_coeffs(0), {1}));
    CHECK(coeffs_equal(chebyshev_coeffs(1), {0, 1}));
    CHECK(coeffs_equal(chebyshev_coeffs(2), {-1, 0, 2}));
    CHECK(coeffs_equal(chebyshev_coeffs(4), {1, 0, -8, 0, 8}));
}

TEST_CASE("formal derivatives") {
    CHECK(coeffs_equal(chebyshev_derivative(1, 1), {1}));
    CHECK(chebyshev_derivative(0, 1).empty());
    CHECK(coeffs_equal(chebyshev_derivative(4, 2), {-16, 0, 96}));
    // T_2 = 2z^2 - 1, so T_2' = 4z.
    CHECK(coeffs_equal(chebyshev_derivative(2, 1), {0, 4}));
    // Deriving past the degree empties the polynomial.
    CHECK(chebyshev_derivative(3, 4).empty());
}

TEST_CASE("derivative commutes with the recurrence") {
    // T_N' = 2 T_{N-1} + 2z T_{N-1}' - T_{N-2}' as coefficient lists.
    for (unsigned n = 2; n <= 12; ++n) {
        std::vector<mpz_class> lhs = chebyshev_derivative(n, 1);
        std::vector<mpz_class> rhs(lhs.size(), mpz_class(0));
        for (size_t i = 0; i < chebyshev_coeffs(n - 1).size(); ++i)
            rhs[i] += 2 * chebyshev_coeffs(n - 1)[i];
        std::vector<mpz_class> dprev = chebyshev_derivative(n - 1, 1);
        for (size_t i = 0; i < dprev.size(); ++i) rhs[i + 1] += 2 * dprev[i];
        std::vector<mpz_class> dprev2 = chebyshev_derivative(n - 2, 1);
        for (size_t i = 0; i < dprev2.size(); ++i) rhs[i] -= dprev2[i];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("defining identity in machine arithmetic") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    for (unsigned n = 0; n <= 32; ++n) {
        CHECK(chebyshev_eval(chebyshev_coeffs(n), 1.0) == doctest::Approx(1.0));
        CHECK(chebyshev_value(n, 1.0) == doctest::Approx(1.0));
        double l1 = 0.0;
        for (const mpz_class& c : chebyshev_coeffs(n)) l1 += std::fabs(c.get_d());
        for (int trial = 0; trial < 40; ++trial) {
            const double t = angle(rng);
            // The recurrence path holds the tight tolerance...
            CHECK(std::fabs(chebyshev_value(n, std::cos(t)) - std::cos(n * t)) < 1e-12);
            // ...while monomial Horner only promises roundoff scaled by the
            // 2^n-sized coefficient magnitudes.
            CHECK(std::fabs(chebyshev_eval(chebyshev_coeffs(n), std::cos(t)) -
                            std::cos(n * t)) < 1e-13 * std::max(1.0, l1));
        }
    }
}

TEST_CASE("defining identity exactly in the two-angle ring") {
    // T_N composed with cos(p - q) must reproduce cos(N(p - q)) as canonical
    // two-angle polynomials — an exact, symbolic form of the identity.
    for (unsigned n = 0; n <= 12; ++n) {
        TrigPoly2 composed =
            chebyshev_eval(chebyshev_coeffs(n), TrigPoly2::cos_difference(1));
        CHECK(composed.equals(TrigPoly2::cos_difference(static_cast<long>(n))));
    }
}

TEST_CASE("Horner over exact scalars") {
    Scalar z = Scalar::exact(1, 3);
    // T_3(z) = 4z^3 - 3z at z = 1/3: 4/27 - 1 = -23/27.
    CHECK(chebyshev_eval(chebyshev_coeffs(3), z) == Scalar::exact(-23, 27));
    // Float prototype drives conversion.
    Scalar zf = Scalar::floating(0.25, 128);
    CHECK(chebyshev_eval(chebyshev_coeffs(2), zf).to_double() ==
          doctest::Approx(2 * 0.0625 - 1));
}
