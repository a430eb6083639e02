#include <doctest.h>

#include "core/errors.hpp"
#include "core/laurent.hpp"

using namespace huygens;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

TrigPoly sample_a() {
    return TrigPoly::make({{Kind::cos, 0, q(1, 2)}, {Kind::cos, 3, q(2)}, {Kind::sin, 1, q(-1)}});
}

TrigPoly sample_b() {
    return TrigPoly::make({{Kind::cos, 1, q(1)}, {Kind::sin, 2, q(1, 3)}});
}

}  // namespace

TEST_CASE("round trip through the Laurent model") {
    for (const TrigPoly& p : {sample_a(), sample_b(), TrigPoly::constant(q(-7, 5))}) {
        CHECK(LaurentPoly::from_trig(p).to_trig().equals(p));
    }
    CHECK(LaurentPoly::from_trig(TrigPoly::zero(Mode::exact)).is_zero());
}

TEST_CASE("conversion is a ring homomorphism") {
    const TrigPoly a = sample_a(), b = sample_b();
    LaurentPoly la = LaurentPoly::from_trig(a), lb = LaurentPoly::from_trig(b);
    CHECK((LaurentPoly::from_trig(a * b) - la * lb).is_zero());
    CHECK((LaurentPoly::from_trig(a + b) - (la + lb)).is_zero());
    CHECK((LaurentPoly::from_trig(a - b) - (la - lb)).is_zero());
}

TEST_CASE("exact division undoes multiplication") {
    const TrigPoly a = sample_a(), b = sample_b();
    LaurentPoly la = LaurentPoly::from_trig(a), lb = LaurentPoly::from_trig(b);
    LaurentPoly prod = la * lb;
    CHECK((prod.divide_exact(la) - lb).is_zero());
    CHECK((prod.divide_exact(lb) - la).is_zero());
    // Quotients of real-valued products convert back losslessly.
    CHECK(prod.divide_exact(la).to_trig().equals(b));
}

TEST_CASE("inexact division is rejected") {
    // cos(2p) is not divisible by cos(p) in the Laurent ring
    // (z^2+z^-2)/2 over (z+z^-1)/2 leaves a remainder.
    LaurentPoly c2 = LaurentPoly::from_trig(TrigPoly::harmonic(Kind::cos, 2, q(1)));
    LaurentPoly c1 = LaurentPoly::from_trig(TrigPoly::harmonic(Kind::cos, 1, q(1)));
    CHECK_THROWS_AS(c2.divide_exact(c1), InvalidArgumentError);
    CHECK_THROWS_AS(c1.divide_exact(LaurentPoly()), DivisionByZeroError);
}

TEST_CASE("float polynomials cannot enter the Laurent model") {
    TrigPoly f = TrigPoly::harmonic(Kind::cos, 1, Scalar::floating(1.0, 64));
    CHECK_THROWS_AS(LaurentPoly::from_trig(f), ModeMismatchError);
}
