#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "core/trigpoly.hpp"

using namespace huygens;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

TrigPoly cosine(long freq, long num = 1, long den = 1) {
    return TrigPoly::harmonic(Kind::cos, freq, q(num, den));
}

TrigPoly sine(long freq, long num = 1, long den = 1) {
    return TrigPoly::harmonic(Kind::sin, freq, q(num, den));
}

}  // namespace

TEST_CASE("canonical form folds negative frequencies and drops sin(0)") {
    // cos(-3 p) = cos(3 p)
    TrigPoly a = TrigPoly::harmonic(Kind::cos, -3, q(2));
    CHECK(a.equals(cosine(3, 2)));

    // sin(-3 p) = -sin(3 p)
    TrigPoly b = TrigPoly::harmonic(Kind::sin, -3, q(2));
    CHECK(b.equals(sine(3, -2)));

    // sin(0) contributes nothing via harmonic()...
    CHECK(TrigPoly::harmonic(Kind::sin, 0, q(5)).is_zero());
    // ...but make() rejects it outright as a malformed term list.
    CHECK_THROWS_AS(TrigPoly::make({{Kind::sin, 0, q(5)}}), InvalidArgumentError);
    // make() also rejects negative frequencies (harmonic() is the folding door).
    CHECK_THROWS_AS(TrigPoly::make({{Kind::cos, -1, q(1)}}), InvalidArgumentError);
}

TEST_CASE("zero coefficients are never stored") {
    TrigPoly p = cosine(2) - cosine(2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);

    TrigPoly r = cosine(1) + sine(4) - sine(4);
    CHECK(r.term_count() == 1);
    CHECK(r.equals(cosine(1)));
}

TEST_CASE("constant term is cos(0)") {
    TrigPoly one = TrigPoly::constant(q(1));
    CHECK(one.term_count() == 1);
    CHECK(one.canonical_text() == "1");
    CHECK(one.eval(1.234) == doctest::Approx(1.0));
}

TEST_CASE("product expands by product-to-sum: cos^2 = 1/2 + 1/2 cos(2p)") {
    TrigPoly c1 = cosine(1);
    TrigPoly sq = c1 * c1;
    TrigPoly expected = TrigPoly::make({{Kind::cos, 0, q(1, 2)}, {Kind::cos, 2, q(1, 2)}});
    CHECK(sq.equals(expected));
    CHECK(sq.canonical_text() == "1/2 + 1/2*cos(2p)");
}

TEST_CASE("product expands sin*sin and sin*cos correctly") {
    // sin^2 = 1/2 - 1/2 cos(2p)
    TrigPoly s1 = sine(1);
    CHECK((s1 * s1).equals(TrigPoly::make({{Kind::cos, 0, q(1, 2)}, {Kind::cos, 2, q(-1, 2)}})));

    // sin * cos = 1/2 sin(2p)
    CHECK((s1 * cosine(1)).equals(sine(2, 1, 2)));

    // cos(2p) * cos(3p) = 1/2 cos(p) + 1/2 cos(5p)
    TrigPoly m = cosine(2) * cosine(3);
    CHECK(m.equals(TrigPoly::make({{Kind::cos, 1, q(1, 2)}, {Kind::cos, 5, q(1, 2)}})));

    // sin(p) * cos(3p) = 1/2 sin(4p) + 1/2 sin(-2p) = 1/2 sin(4p) - 1/2 sin(2p)
    TrigPoly n = s1 * cosine(3);
    CHECK(n.equals(TrigPoly::make({{Kind::sin, 2, q(-1, 2)}, {Kind::sin, 4, q(1, 2)}})));

    // Pythagorean identity closes in the ring.
    TrigPoly pyth = s1 * s1 + cosine(1) * cosine(1);
    CHECK(pyth.equals(TrigPoly::constant(q(1))));
}

TEST_CASE("derivative maps cos(np) to -n sin(np) and sin(np) to n cos(np)") {
    TrigPoly p = cosine(3) + sine(2);
    TrigPoly d = p.derivative();
    CHECK(d.equals(TrigPoly::make({{Kind::cos, 2, q(2)}, {Kind::sin, 3, q(-3)}})));

    // Second derivative scales each harmonic by -n^2.
    TrigPoly d2 = p.derivative(2);
    CHECK(d2.equals(TrigPoly::make({{Kind::cos, 3, q(-9)}, {Kind::sin, 2, q(-4)}})));

    // Constants die.
    CHECK(TrigPoly::constant(q(5)).derivative().is_zero());
}

TEST_CASE("evaluation agrees with the closed form at double angles") {
    TrigPoly p = TrigPoly::make(
        {{Kind::cos, 0, q(1, 2)}, {Kind::cos, 2, q(1, 2)}, {Kind::sin, 1, q(-3)}});
    for (double t : {0.0, 0.3, 1.7, -2.2}) {
        double want = 0.5 + 0.5 * std::cos(2 * t) - 3 * std::sin(t);
        CHECK(p.eval(t) == doctest::Approx(want));
    }
}

TEST_CASE("eval_circle on exact unit points is exact") {
    // cos(2p) at the (3/5, 4/5) point: cos(2t) = c^2 - s^2 = 9/25 - 16/25.
    UnitPoint pt(q(3, 5), q(4, 5));
    CHECK(cosine(2).eval_circle(pt) == q(-7, 25));
    // sin(2t) = 2 c s = 24/25.
    CHECK(sine(2).eval_circle(pt) == q(24, 25));
    // Rotation recurrence reaches higher harmonics: cos(3t) = 4c^3 - 3c.
    CHECK(cosine(3).eval_circle(pt) == q(4 * 27 - 3 * 3 * 25, 125));
}

TEST_CASE("shifted cosine expands through the angle-sum identity") {
    // cos(2p + t0) with (cos t0, sin t0) = (3/5, 4/5).
    TrigPoly p = TrigPoly::shifted_cosine(2, UnitPoint(q(3, 5), q(4, 5)));
    CHECK(p.equals(TrigPoly::make({{Kind::cos, 2, q(3, 5)}, {Kind::sin, 2, q(-4, 5)}})));

    // Trivial phase gives a plain cosine; frequency zero gives the constant cos(t0).
    CHECK(TrigPoly::shifted_cosine(3, UnitPoint::one()).equals(cosine(3)));
    CHECK(TrigPoly::shifted_cosine(0, UnitPoint(q(3, 5), q(4, 5)))
              .equals(TrigPoly::constant(q(3, 5))));
}

TEST_CASE("canonical text orders cos ascending then sin ascending") {
    TrigPoly p = TrigPoly::make({{Kind::sin, 3, q(-1)},
                                 {Kind::cos, 2, q(1, 3)},
                                 {Kind::cos, 0, q(-2)},
                                 {Kind::sin, 1, q(1)}});
    CHECK(p.canonical_text() == "-2 + 1/3*cos(2p) + sin(p) - sin(3p)");
    CHECK(TrigPoly::zero(Mode::exact).canonical_text() == "0");
    // Frequency 1 prints without the multiplier.
    CHECK(cosine(1).canonical_text() == "cos(p)");
}

TEST_CASE("leading coefficient prefers the highest sin, then highest cos") {
    TrigPoly p = TrigPoly::make({{Kind::cos, 5, q(7)}, {Kind::sin, 5, q(3)}});
    CHECK(p.leading_coefficient() == q(3));
    TrigPoly c = cosine(4, 9);
    CHECK(c.leading_coefficient() == q(9));
    CHECK_THROWS_AS(TrigPoly::zero(Mode::exact).leading_coefficient(),
                    InvalidArgumentError);
}

TEST_CASE("floating mode uses a scale-aware zero test") {
    unsigned bits = 128;
    Scalar big = Scalar::floating(1.0, bits);
    TrigPoly p = TrigPoly::harmonic(Kind::cos, 1, big);
    // Subtracting a nearby value leaves a residue far above 10^-(bits/4): not zero.
    TrigPoly r = p - TrigPoly::harmonic(Kind::cos, 1, Scalar::floating(1.0 - 1e-6, bits));
    CHECK_FALSE(r.is_zero());
    // Exact cancellation in floating mode is zero.
    CHECK((p - p).is_zero());
}

TEST_CASE("mode mixing between polynomials throws") {
    TrigPoly a = cosine(1);
    TrigPoly b = TrigPoly::harmonic(Kind::cos, 1, Scalar::floating(1.0, 64));
    CHECK_THROWS_AS(a + b, ModeMismatchError);
    CHECK_THROWS_AS(a * b, ModeMismatchError);
}

TEST_CASE("evaluation is a ring homomorphism at random circle points") {
    // Exact rational points on the circle from Pythagorean triples.
    std::vector<UnitPoint> pts = {
        UnitPoint(q(3, 5), q(4, 5)),
        UnitPoint(q(5, 13), q(-12, 13)),
        UnitPoint(q(-8, 17), q(15, 17)),
        UnitPoint(q(1), q(0)),
    };
    TrigPoly a = cosine(2, 1, 3) + sine(1, -2) + TrigPoly::constant(q(1, 7));
    TrigPoly b = sine(3, 5) - cosine(1, 1, 2);
    for (const UnitPoint& pt : pts) {
        CHECK((a * b).eval_circle(pt) == a.eval_circle(pt) * b.eval_circle(pt));
        CHECK((a + b).eval_circle(pt) == a.eval_circle(pt) + b.eval_circle(pt));
        CHECK((a - b).eval_circle(pt) == a.eval_circle(pt) - b.eval_circle(pt));
    }
}
