#include "core/scalar.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace huygens {

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::exact(const mpq_class& value) {
    mpq_class q(value);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::exact(const mpz_class& value) { return Scalar(mpq_class(value)); }

Scalar Scalar::floating(double value, unsigned precision_bits) {
    return Scalar(BigFloat(value, precision_bits));
}

Scalar Scalar::floating(BigFloat value) { return Scalar(std::move(value)); }

unsigned Scalar::precision_bits() const {
    if (mode() == Mode::exact) return 0;
    return std::get<BigFloat>(value_).precision_bits();
}

void Scalar::require_same_mode(const Scalar& rhs) const {
    if (mode() != rhs.mode())
        throw ModeMismatchError("arithmetic between exact and floating scalars");
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_mode(rhs);
    if (mode() == Mode::exact)
        return Scalar(mpq_class(rational() + rhs.rational()));
    return Scalar(big_float() + rhs.big_float());
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_mode(rhs);
    if (mode() == Mode::exact)
        return Scalar(mpq_class(rational() - rhs.rational()));
    return Scalar(big_float() - rhs.big_float());
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_mode(rhs);
    if (mode() == Mode::exact)
        return Scalar(mpq_class(rational() * rhs.rational()));
    return Scalar(big_float() * rhs.big_float());
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_mode(rhs);
    if (rhs.is_zero()) throw DivisionByZeroError("scalar division by zero");
    if (mode() == Mode::exact)
        return Scalar(mpq_class(rational() / rhs.rational()));
    return Scalar(big_float() / rhs.big_float());
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::exact) return Scalar(mpq_class(-rational()));
    return Scalar(-big_float());
}

bool Scalar::operator==(const Scalar& rhs) const {
    require_same_mode(rhs);
    if (mode() == Mode::exact) return rational() == rhs.rational();
    return big_float() == rhs.big_float();
}

bool Scalar::is_zero() const {
    if (mode() == Mode::exact) return rational() == 0;
    return big_float().is_zero();
}

bool Scalar::is_one() const {
    if (mode() == Mode::exact) return rational() == 1;
    return big_float() == BigFloat(1.0, big_float().precision_bits());
}

int Scalar::sign() const {
    if (mode() == Mode::exact) return sgn(rational());
    return big_float().sign();
}

Scalar Scalar::abs() const {
    if (mode() == Mode::exact) return Scalar(mpq_class(::abs(rational())));
    return Scalar(big_float().abs());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
    if (mode() == Mode::exact) return Scalar(mpq_class(1 / rational()));
    return Scalar(BigFloat(1.0, big_float().precision_bits()) / big_float());
}

Scalar Scalar::halved() const {
    if (mode() == Mode::exact) return Scalar(mpq_class(rational() / 2));
    return Scalar(big_float() / BigFloat(2.0, big_float().precision_bits()));
}

Scalar Scalar::integer_like(const Scalar& proto, long value) {
    if (proto.mode() == Mode::exact) return Scalar(mpq_class(value));
    return Scalar(BigFloat(static_cast<double>(value), proto.precision_bits()));
}

Scalar Scalar::zero_like() const {
    if (mode() == Mode::exact) return Scalar(mpq_class(0));
    return Scalar(BigFloat(big_float().precision_bits()));
}

Scalar Scalar::one_like() const {
    if (mode() == Mode::exact) return Scalar(mpq_class(1));
    return Scalar(BigFloat(1.0, big_float().precision_bits()));
}

double Scalar::to_double() const {
    if (mode() == Mode::exact) return rational().get_d();
    return big_float().to_double();
}

std::string Scalar::to_string() const {
    if (mode() == Mode::exact) {
        if (rational().get_den() == 1) return rational().get_num().get_str();
        return rational().get_str();
    }
    return big_float().to_string() + "@" + std::to_string(precision_bits());
}

const mpq_class& Scalar::rational() const {
    if (mode() != Mode::exact) throw ModeMismatchError("scalar is not exact");
    return std::get<mpq_class>(value_);
}

const BigFloat& Scalar::big_float() const {
    if (mode() != Mode::floating) throw ModeMismatchError("scalar is not floating");
    return std::get<BigFloat>(value_);
}

Scalar Scalar::to_floating(unsigned precision_bits) const {
    if (mode() == Mode::floating) return *this;
    return Scalar(BigFloat::from_rational(rational().get_mpq_t(), precision_bits));
}

Scalar Scalar::to_mode_of(const Scalar& proto) const {
    if (proto.mode() == Mode::exact) {
        require_same_mode(proto);
        return *this;
    }
    return to_floating(proto.precision_bits());
}

UnitPoint::UnitPoint(Scalar cos_part, Scalar sin_part) : c(std::move(cos_part)), s(std::move(sin_part)) {
    if (c.mode() != s.mode())
        throw ModeMismatchError("unit-circle point with mixed scalar modes");
    const Scalar norm = c * c + s * s;
    if (c.mode() == Mode::exact) {
        if (norm != c.one_like())
            throw InvalidArgumentError("phase point not on the unit circle: c^2+s^2 = " +
                                       norm.to_string());
    } else {
        const double tol = std::pow(2.0, -0.5 * static_cast<double>(c.precision_bits()));
        if (std::fabs(norm.to_double() - 1.0) > tol)
            throw InvalidArgumentError("phase point not on the unit circle within tolerance");
    }
}

UnitPoint UnitPoint::from_angle(double radians, unsigned precision_bits) {
    BigFloat angle(radians, precision_bits);
    return UnitPoint(Scalar::floating(angle.cos()), Scalar::floating(angle.sin()));
}

}  // namespace huygens
