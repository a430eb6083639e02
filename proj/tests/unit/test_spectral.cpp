#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/spectral.hpp"

using namespace huygens;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

TrigPoly cosp() { return TrigPoly::harmonic(Kind::cos, 1, q(1)); }
TrigPoly sinp() { return TrigPoly::harmonic(Kind::sin, 1, q(1)); }

// The printed closed form of the potential for the (0,1,3,4) sequence.
mpq_class printed_potential_0134(const mpq_class& x1, const mpq_class& x2) {
    const mpq_class x1sq = x1 * x1, x2sq = x2 * x2;
    const mpq_class num = 12 * (49 * x1sq * x1sq + 28 * x1sq * x2sq - x2sq * x2sq);
    const mpq_class den = x2sq * (7 * x1sq + x2sq) * (7 * x1sq + x2sq);
    return num / den;
}

}  // namespace

TEST_CASE("one-entry data gives the free operator") {
    AngularOperator op(KData::trivial({0}));
    CHECK(op.potential().is_zero());
    CHECK(op.wronskian_poly().equals(TrigPoly::constant(q(1))));
    CHECK(op.eigenfunction(0).equals(TrigRational(TrigPoly::constant(q(1)))));
    CHECK(op.weight(0) == q(1));
    CHECK(op.potential_value(0.3, -1.2) == 0.0);
    CHECK(op.singular_angles().empty());

    // Free case: -f'' has eigenvalue n^2 on frequency-n harmonics.
    TrigRational f(TrigPoly::harmonic(Kind::cos, 3, q(1)));
    CHECK(op.apply(f).equals(f.scaled(q(9))));
}

TEST_CASE("two-entry data reproduces the hand-computed pieces") {
    AngularOperator op(KData::trivial({0, 1}));
    CHECK(op.wronskian_poly().equals(-sinp()));

    // v = 2 / sin^2.
    CHECK(op.potential().equals(TrigRational(TrigPoly::constant(q(2)), sinp() * sinp())));

    // Eigenfunctions: reduced Wronskians over W.
    CHECK(op.eigenfunction(0).equals(TrigRational(cosp(), -sinp())));
    CHECK(op.eigenfunction(1).equals(TrigRational(TrigPoly::constant(q(1)), -sinp())));
    CHECK(op.weight(0) == q(-1));
    CHECK(op.weight(1) == q(1));

    // V(0, 1) = 2 / x2^2 = 2.
    CHECK(op.potential_value(0.0, 1.0) == doctest::Approx(2.0));
    CHECK(op.potential_value_exact(mpq_class(1, 3), mpq_class(2, 7)) == mpq_class(49, 2));

    // apply(1) = v.
    CHECK(op.apply(TrigRational(TrigPoly::constant(q(1)))).equals(op.potential()));

    // Singular rays of -sin(phi): angles 0 and pi.
    const auto& zeros = op.singular_angles();
    REQUIRE(zeros.size() == 2);
    CHECK(zeros[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(zeros[1] == doctest::Approx(3.14159265358979).epsilon(1e-9));
    CHECK(op.angular_distance(1.0) == doctest::Approx(1.0));

    // An angle ~1e-6 off the x-axis puts sin^2 at ~1e-12, inside the guard.
    CHECK_THROWS_AS(op.potential_value(1.0, 1e-6), NearSingularError);
    CHECK_THROWS_AS(op.potential_value(0.0, 0.0), OriginError);
    CHECK_THROWS_AS(op.potential_value_exact(mpq_class(1), mpq_class(0)),
                    NearSingularError);
}

TEST_CASE("eigenfunction identity holds exactly") {
    for (const auto& ks :
         {std::vector<long>{0, 1}, std::vector<long>{0, 2}, std::vector<long>{0, 1, 3}}) {
        AngularOperator op(KData::trivial(ks));
        for (size_t i = 0; i < ks.size(); ++i) {
            TrigRational f = op.eigenfunction(i);
            const long k = ks[i];
            CHECK(op.apply(f).equals(f.scaled(q(k * k))));
        }
    }
    // Nontrivial phase on the second entry.
    KData data({0, 2}, {UnitPoint::one(), UnitPoint(q(3, 5), q(4, 5))});
    AngularOperator op(data);
    CHECK(op.apply(op.eigenfunction(1)).equals(op.eigenfunction(1).scaled(q(4))));
}

TEST_CASE("four-entry potential matches the printed rational function") {
    AngularOperator op(KData::trivial({0, 1, 3, 4}));
    CHECK(op.weight(0) == q(-144));

    // Spot value V(1,1) = 912/64 = 57/4.
    CHECK(op.potential_value_exact(mpq_class(1), mpq_class(1)) == mpq_class(57, 4));
    CHECK(op.potential_value(1.0, 1.0) == doctest::Approx(14.25));

    // Exact agreement at assorted rational points off the singular lines.
    const mpq_class pts[][2] = {{mpq_class(1), mpq_class(2)},
                                {mpq_class(-3, 2), mpq_class(1, 3)},
                                {mpq_class(5, 7), mpq_class(-2, 9)},
                                {mpq_class(0), mpq_class(1)},
                                {mpq_class(22, 3), mpq_class(17, 5)}};
    for (const auto& p : pts) {
        CHECK(op.potential_value_exact(p[0], p[1]) == printed_potential_0134(p[0], p[1]));
    }
}

TEST_CASE("potential scales like an inverse square") {
    AngularOperator op(KData::trivial({0, 1, 3}));
    const double base = op.potential_value(0.8, 0.6);
    for (double lam : {2.0, 0.5, 7.3}) {
        CHECK(op.potential_value(0.8 * lam, 0.6 * lam) ==
              doctest::Approx(base / (lam * lam)));
    }
}

TEST_CASE("Darboux pair links consecutive operators") {
    AngularOperator base(KData::trivial({0, 1}));
    AngularOperator ext(KData::trivial({0, 1, 3}));
    const TrigRational top = ext.eigenfunction(2);

    // The backward map annihilates the transforming function.
    CHECK(darboux_backward(ext, top).is_zero());

    // Lowering identity: backward sends extended eigenfunctions to the
    // base ones with a sign.
    for (size_t i = 0; i < 2; ++i) {
        CHECK(darboux_backward(ext, ext.eigenfunction(i)).equals(-base.eigenfunction(i)));
    }

    // Raising identity: forward scales by the eigenvalue gap 3^2 - k_i^2.
    for (size_t i = 0; i < 2; ++i) {
        const long k = base.data().k()[i];
        CHECK(darboux_forward(ext, base.eigenfunction(i))
                  .equals(ext.eigenfunction(i).scaled(q(9 - k * k))));
    }

    // Factorization of the base operator: backward(forward(f)) + 9 f = L f.
    for (const TrigRational& f :
         {base.eigenfunction(0), TrigRational(TrigPoly::harmonic(Kind::cos, 2, q(1))),
          TrigRational(cosp(), sinp())}) {
        TrigRational lhs = darboux_backward(ext, darboux_forward(ext, f)) + f.scaled(q(9));
        CHECK(lhs.equals(base.apply(f)));
    }
}
