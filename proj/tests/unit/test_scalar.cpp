#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/scalar.hpp"

using namespace huygens;

TEST_CASE("exact scalars reduce to lowest terms and print num/den") {
    Scalar a = Scalar::exact(2, 4);
    CHECK(a.to_string() == "1/2");
    CHECK(a == Scalar::exact(1, 2));

    Scalar b = Scalar::exact(-6, 4);
    CHECK(b.to_string() == "-3/2");

    Scalar c = Scalar::exact(7);
    CHECK(c.to_string() == "7");  // denominator 1 omitted

    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * Scalar::exact(4)).to_string() == "2");
    CHECK((c / Scalar::exact(2)).to_string() == "7/2");
    CHECK((-b).to_string() == "3/2");
    CHECK(b.abs().to_string() == "3/2");
    CHECK(b.sign() == -1);
    CHECK(a.inverse().to_string() == "2");
    CHECK(a.halved().to_string() == "1/4");
}

TEST_CASE("division by exact zero throws") {
    CHECK_THROWS_AS(Scalar::exact(1) / Scalar::exact(0), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::exact(0).inverse(), DivisionByZeroError);
}

TEST_CASE("floating scalars carry precision and round-trip near double") {
    Scalar x = Scalar::floating(0.125, 128);
    CHECK(x.mode() == Mode::floating);
    CHECK(x.precision_bits() == 128);
    CHECK(x.to_double() == doctest::Approx(0.125));

    Scalar y = Scalar::floating(3.0, 64);
    Scalar z = x * y;  // result precision is the max of the operands
    CHECK(z.precision_bits() == 128);
    CHECK(z.to_double() == doctest::Approx(0.375));
}

TEST_CASE("mixing exact and floating scalars is an error") {
    Scalar a = Scalar::exact(1, 2);
    Scalar b = Scalar::floating(0.5, 64);
    CHECK_THROWS_AS(a + b, ModeMismatchError);
    CHECK_THROWS_AS(a * b, ModeMismatchError);
    CHECK_THROWS_AS((void)(a == b), ModeMismatchError);
}

TEST_CASE("integer_like and zero/one helpers follow the prototype's mode") {
    Scalar proto = Scalar::floating(1.5, 96);
    Scalar five = Scalar::integer_like(proto, 5);
    CHECK(five.mode() == Mode::floating);
    CHECK(five.precision_bits() == 96);
    CHECK(five.to_double() == doctest::Approx(5.0));

    CHECK(proto.zero_like().is_zero());
    CHECK(proto.one_like().is_one());
    CHECK(Scalar::exact(3).zero_like().mode() == Mode::exact);
}

TEST_CASE("to_floating converts exact values at the requested precision") {
    Scalar third = Scalar::exact(1, 3);
    Scalar f = third.to_floating(256);
    CHECK(f.mode() == Mode::floating);
    CHECK(f.precision_bits() == 256);
    CHECK(std::abs(f.to_double() - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("float to_string round-trips through the @bits suffix") {
    Scalar x = Scalar::floating(0.1, 128);
    std::string s = x.to_string();
    CHECK(s.find("@128") != std::string::npos);
}

TEST_CASE("unit points validate the circle equation") {
    UnitPoint p(Scalar::exact(3, 5), Scalar::exact(4, 5));
    CHECK(p.c.to_string() == "3/5");

    CHECK_THROWS_AS(UnitPoint(Scalar::exact(1, 2), Scalar::exact(1, 2)),
                    InvalidArgumentError);

    UnitPoint q = UnitPoint::from_angle(0.7, 128);
    double c = q.c.to_double(), s = q.s.to_double();
    CHECK(c == doctest::Approx(std::cos(0.7)));
    CHECK(s == doctest::Approx(std::sin(0.7)));

    CHECK(UnitPoint::one().is_one());
}
