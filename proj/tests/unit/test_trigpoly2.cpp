#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/trigpoly2.hpp"

using namespace huygens;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

}  // namespace

TEST_CASE("cos_difference expands the subtraction identity") {
    TrigPoly2 c1 = TrigPoly2::cos_difference(1);
    // cos(p - q) = cos p cos q + sin p sin q
    TrigPoly2 expected = TrigPoly2::tensor(TrigPoly::harmonic(Kind::cos, 1, q(1)),
                                           TrigPoly::harmonic(Kind::cos, 1, q(1))) +
                         TrigPoly2::tensor(TrigPoly::harmonic(Kind::sin, 1, q(1)),
                                           TrigPoly::harmonic(Kind::sin, 1, q(1)));
    CHECK(c1.equals(expected));
    CHECK(TrigPoly2::cos_difference(0).equals(TrigPoly2::constant(q(1))));

    for (double a : {0.4, 1.9}) {
        for (double b : {-0.3, 2.5}) {
            CHECK(TrigPoly2::cos_difference(3).eval(a, b) ==
                  doctest::Approx(std::cos(3 * (a - b))));
            CHECK(TrigPoly2::sin_difference(3).eval(a, b) ==
                  doctest::Approx(std::sin(3 * (a - b))));
        }
    }
}

TEST_CASE("two-angle products expand in each slot independently") {
    // cos(p)cos(q) * cos(p)cos(q) at (a,b) equals cos^2 a cos^2 b.
    TrigPoly2 cc = TrigPoly2::tensor(TrigPoly::harmonic(Kind::cos, 1, q(1)),
                                     TrigPoly::harmonic(Kind::cos, 1, q(1)));
    TrigPoly2 sq = cc * cc;
    double a = 0.8, b = -1.1;
    CHECK(sq.eval(a, b) ==
          doctest::Approx(std::pow(std::cos(a), 2) * std::pow(std::cos(b), 2)));
    // Canonical expansion: (1/2 + 1/2 cos 2p)(1/2 + 1/2 cos 2q).
    TrigPoly half_plus = TrigPoly::make({{Kind::cos, 0, q(1, 2)}, {Kind::cos, 2, q(1, 2)}});
    CHECK(sq.equals(TrigPoly2::tensor(half_plus, half_plus)));
}

TEST_CASE("embeddings act as one-variable polynomials") {
    TrigPoly a = TrigPoly::make({{Kind::cos, 2, q(1)}, {Kind::sin, 1, q(-1)}});
    TrigPoly2 in_p = TrigPoly2::embed_first(a);
    TrigPoly2 in_q = TrigPoly2::embed_second(a);
    CHECK(in_p.eval(0.9, 123.0) == doctest::Approx(a.eval(0.9)));
    CHECK(in_q.eval(123.0, 0.9) == doctest::Approx(a.eval(0.9)));
    CHECK(in_p.swapped_angles().equals(in_q));
}

TEST_CASE("partial derivatives act on their own slot only") {
    TrigPoly2 f = TrigPoly2::cos_difference(2);
    // d/dp cos(2(p-q)) = -2 sin(2(p-q)); d/dq gives +2 sin(2(p-q)).
    CHECK(f.derivative_first().equals(TrigPoly2::sin_difference(2).scaled(q(-2))));
    CHECK(f.derivative_second().equals(TrigPoly2::sin_difference(2).scaled(q(2))));
    // Mixed partials commute.
    CHECK(f.derivative_first().derivative_second().equals(
        f.derivative_second().derivative_first()));
}

TEST_CASE("diagonal substitutes q := p") {
    // cos(k(p-q)) restricted to the diagonal is 1.
    CHECK(TrigPoly2::cos_difference(4).diagonal().equals(TrigPoly::constant(q(1))));
    CHECK(TrigPoly2::sin_difference(4).diagonal().is_zero());

    // cos(p)sin(q) on the diagonal is 1/2 sin(2p).
    TrigPoly2 cs = TrigPoly2::tensor(TrigPoly::harmonic(Kind::cos, 1, q(1)),
                                     TrigPoly::harmonic(Kind::sin, 1, q(1)));
    CHECK(cs.diagonal().equals(TrigPoly::harmonic(Kind::sin, 2, q(1, 2))));
}

TEST_CASE("exact circle-point evaluation matches double evaluation") {
    TrigPoly2 f = TrigPoly2::cos_difference(2) * TrigPoly2::cos_difference(3) +
                  TrigPoly2::sin_difference(1).scaled(q(1, 3));
    UnitPoint pa(q(3, 5), q(4, 5));
    UnitPoint pb(q(5, 13), q(-12, 13));
    double ta = std::atan2(4.0 / 5, 3.0 / 5), tb = std::atan2(-12.0 / 13, 5.0 / 13);
    CHECK(f.eval_circle(pa, pb).to_double() == doctest::Approx(f.eval(ta, tb)));
}

TEST_CASE("canonical text for the bivariate ring") {
    TrigPoly2 f = TrigPoly2::tensor(TrigPoly::harmonic(Kind::cos, 2, q(1)),
                                    TrigPoly::harmonic(Kind::sin, 1, q(-3)));
    CHECK(f.canonical_text() == "-3*cos(2p)*sin(q)");
    CHECK(TrigPoly2::zero(Mode::exact).canonical_text() == "0");
}

TEST_CASE("swap is an involution compatible with arithmetic") {
    TrigPoly2 f = TrigPoly2::tensor(TrigPoly::harmonic(Kind::cos, 2, q(1)),
                                    TrigPoly::harmonic(Kind::sin, 3, q(2))) +
                  TrigPoly2::cos_difference(1);
    CHECK(f.swapped_angles().swapped_angles().equals(f));
    TrigPoly2 g = TrigPoly2::sin_difference(2);
    // sin(k(p-q)) is antisymmetric under the swap.
    CHECK(g.swapped_angles().equals(-g));
    // cos-difference polynomials are symmetric.
    CHECK(TrigPoly2::cos_difference(5).swapped_angles().equals(TrigPoly2::cos_difference(5)));
    CHECK((f * g).swapped_angles().equals(f.swapped_angles() * g.swapped_angles()));
}
