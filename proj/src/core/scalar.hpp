#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "core/bigfloat.hpp"

namespace huygens {

enum class Mode { exact, floating };

// A coefficient-field element: either an exact rational (always stored in
// lowest terms with positive denominator) or an arbitrary-precision float.
// Arithmetic never mixes the two modes; mixing throws ModeMismatchError.
class Scalar {
  public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar exact(long num, long den = 1);
    static Scalar exact(const mpq_class& value);
    static Scalar exact(const mpz_class& value);
    static Scalar floating(double value, unsigned precision_bits);
    static Scalar floating(BigFloat value);

    Mode mode() const {
        return std::holds_alternative<mpq_class>(value_) ? Mode::exact : Mode::floating;
    }
    unsigned precision_bits() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    bool is_one() const;
    int sign() const;
    Scalar abs() const;
    Scalar inverse() const;
    Scalar halved() const;

    // An integer literal in the same mode/precision as the prototype.
    static Scalar integer_like(const Scalar& proto, long value);

    // Same-mode zero/one of matching precision, for seeding accumulators.
    Scalar zero_like() const;
    Scalar one_like() const;

    double to_double() const;
    // Exact scalars as "num/den" ("num" when den == 1); floats as decimal@bits.
    std::string to_string() const;

    const mpq_class& rational() const;  // throws unless exact mode
    const BigFloat& big_float() const;  // throws unless floating mode

    // Converts an exact scalar to floating at the given precision (identity
    // on floating scalars).
    Scalar to_floating(unsigned precision_bits) const;

    // Converts this scalar, if exact, to the mode/precision of the prototype.
    // A floating scalar with an exact prototype is a mode mismatch.
    Scalar to_mode_of(const Scalar& proto) const;

  private:
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(BigFloat f) : value_(std::move(f)) {}

    void require_same_mode(const Scalar& rhs) const;

    std::variant<mpq_class, BigFloat> value_;
};

// A point (c, s) on the unit circle, c^2 + s^2 = 1. Carries the data of an
// angle without ever leaving the coefficient field.
struct UnitPoint {
    Scalar c;
    Scalar s;

    // Validates the circle equation (exactly in exact mode, within
    // 2^-(bits/2) in floating mode).
    UnitPoint(Scalar cos_part, Scalar sin_part);

    static UnitPoint one() { return UnitPoint(Scalar::exact(1), Scalar::exact(0)); }
    static UnitPoint from_angle(double radians, unsigned precision_bits);

    bool is_one() const { return c.is_one() && s.is_zero(); }
};

}  // namespace huygens
