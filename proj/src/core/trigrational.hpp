#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/trigpoly.hpp"
#include "core/trigpoly2.hpp"

namespace huygens {

// Quotient of two trigonometric polynomials (one- or two-angle). No
// polynomial GCD reduction is attempted: quotients are kept as-is, equality
// is decided by cross-multiplication, and the only normalization is scalar —
// the denominator's leading stored coefficient is made 1 (exact mode) or the
// denominator is divided by its largest-magnitude coefficient (float mode,
// where the order-based leading coefficient may be tiny).
template <class P>
    requires std::same_as<P, TrigPoly> || std::same_as<P, TrigPoly2>
class RationalFunction {
  public:
    RationalFunction()
        : num_(P::constant(Scalar::exact(0))), den_(P::constant(Scalar::exact(1))) {}

    explicit RationalFunction(P numerator)
        : num_(std::move(numerator)), den_(unit_like(num_)) {}

    RationalFunction(P numerator, P denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero())
            throw DivisionByZeroError("rational function with zero denominator");
        normalize();
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    Mode mode() const { return num_.mode(); }
    unsigned precision_bits() const { return num_.precision_bits(); }

    bool is_zero() const { return num_.is_zero(); }

    // a/b == c/d  iff  a*d - c*b == 0 (sound without GCDs).
    bool equals(const RationalFunction& rhs) const {
        return (num_ * rhs.den_ - rhs.num_ * den_).is_zero();
    }

    RationalFunction operator+(const RationalFunction& rhs) const {
        return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    RationalFunction operator-(const RationalFunction& rhs) const {
        return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    }
    RationalFunction operator*(const RationalFunction& rhs) const {
        return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
    }
    RationalFunction operator/(const RationalFunction& rhs) const {
        if (rhs.is_zero())
            throw DivisionByZeroError("division by an identically zero rational function");
        return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction scaled(const Scalar& factor) const {
        return RationalFunction(num_.scaled(factor), den_);
    }
    RationalFunction inverse() const {
        if (is_zero())
            throw DivisionByZeroError("inverse of an identically zero rational function");
        return RationalFunction(den_, num_);
    }

    // Quotient rule, one-angle flavor.
    RationalFunction derivative() const
        requires std::same_as<P, TrigPoly>
    {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                                den_ * den_);
    }

    // Quotient rule in each slot, two-angle flavor.
    RationalFunction derivative_first() const
        requires std::same_as<P, TrigPoly2>
    {
        return RationalFunction(
            num_.derivative_first() * den_ - num_ * den_.derivative_first(), den_ * den_);
    }
    RationalFunction derivative_second() const
        requires std::same_as<P, TrigPoly2>
    {
        return RationalFunction(
            num_.derivative_second() * den_ - num_ * den_.derivative_second(), den_ * den_);
    }

    double eval(double theta, double den_guard = 1e-12) const
        requires std::same_as<P, TrigPoly>
    {
        const double d = den_.eval(theta);
        guard_denominator(d, den_guard);
        return num_.eval(theta) / d;
    }
    double eval(double theta_a, double theta_b, double den_guard = 1e-12) const
        requires std::same_as<P, TrigPoly2>
    {
        const double d = den_.eval(theta_a, theta_b);
        guard_denominator(d, den_guard);
        return num_.eval(theta_a, theta_b) / d;
    }

    // Exact evaluation at unit-circle points; a denominator that is exactly
    // zero is reported as a singular evaluation with magnitude 0.
    Scalar eval_circle(const UnitPoint& pt) const
        requires std::same_as<P, TrigPoly>
    {
        Scalar d = den_.eval_circle(pt);
        if (d.is_zero())
            throw NearSingularError("denominator vanishes at the evaluation angle", 0.0);
        return num_.eval_circle(pt) / d;
    }
    Scalar eval_circle(const UnitPoint& a, const UnitPoint& b) const
        requires std::same_as<P, TrigPoly2>
    {
        Scalar d = den_.eval_circle(a, b);
        if (d.is_zero())
            throw NearSingularError("denominator vanishes at the evaluation angles", 0.0);
        return num_.eval_circle(a, b) / d;
    }

    std::string canonical_text() const {
        if (den_.equals(unit_like(den_))) return num_.canonical_text();
        std::string numerator = num_.canonical_text();
        if (num_.term_count() > 1) numerator = "(" + numerator + ")";
        return numerator + "/(" + den_.canonical_text() + ")";
    }

  private:
    static P unit_like(const P& proto) {
        Scalar one = proto.mode() == Mode::exact
                         ? Scalar::exact(1)
                         : Scalar::floating(1.0, proto.precision_bits());
        return P::constant(one);
    }

    static void guard_denominator(double d, double den_guard) {
        if (std::abs(d) <= den_guard)
            throw NearSingularError("denominator below evaluation guard", std::abs(d));
    }

    void normalize() {
        if (num_.is_zero()) {
            // Canonical zero: 0/1 in the same mode.
            den_ = unit_like(den_);
            return;
        }
        Scalar pivot = den_.mode() == Mode::exact ? den_.leading_coefficient()
                                                  : largest_coefficient(den_);
        if (pivot.is_one()) return;
        Scalar inv = pivot.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    static Scalar largest_coefficient(const P& poly) {
        Scalar best = poly.leading_coefficient();
        double best_mag = std::abs(best.to_double());
        for (const auto& term : poly.terms()) {
            const double mag = std::abs(term.coeff.to_double());
            if (mag > best_mag) {
                best = term.coeff;
                best_mag = mag;
            }
        }
        return best;
    }

    P num_;
    P den_;
};

using TrigRational = RationalFunction<TrigPoly>;
using TrigRational2 = RationalFunction<TrigPoly2>;

}  // namespace huygens
