#pragma once

#include <vector>

#include "core/spectral.hpp"
#include "core/trigpoly2.hpp"

namespace huygens {

// A two-angle fraction with a structured denominator: num / (W(p)^wp *
// W(q)^wq), where W is the full Wronskian of a fixed operator. Keeping the
// denominator as tracked powers of W (instead of an opaque polynomial) makes
// differentiation raise the power by one rather than squaring the
// denominator, which is what keeps the symbolic transport and kernel checks
// polynomial-sized.
struct AngularFraction {
    TrigPoly2 num;
    int wp = 0;
    int wq = 0;
};

// One radial summand of a separated two-point function:
// angular(p, q) * r^r_pow * rho^rho_pow.
struct RadialTerm {
    AngularFraction angular;
    long r_pow = 0;
    long rho_pow = 0;
};

// A finite sum of radial terms; canonical form merges equal radial powers
// and drops vanishing angular parts.
struct SeparatedFunction {
    std::vector<RadialTerm> terms;
};

// The fraction algebra bound to one operator. Immutable after construction.
class SeparatedContext {
  public:
    explicit SeparatedContext(AngularOperator op);

    const AngularOperator& op() const { return op_; }
    // W embedded into the first and second angle slot.
    const TrigPoly2& w_first() const { return wp_; }
    const TrigPoly2& w_second() const { return wq_; }

    AngularFraction from_poly(TrigPoly2 num) const { return {std::move(num), 0, 0}; }
    AngularFraction constant(const Scalar& value) const;

    // Rewrites the fraction over the (elementwise maximal) common
    // denominator powers; target powers must dominate the current ones.
    AngularFraction raised(const AngularFraction& a, int wp, int wq) const;

    AngularFraction add(const AngularFraction& a, const AngularFraction& b) const;
    AngularFraction subtract(const AngularFraction& a, const AngularFraction& b) const;
    AngularFraction multiply(const AngularFraction& a, const AngularFraction& b) const;
    AngularFraction multiply(const AngularFraction& a, const TrigPoly2& poly) const;
    AngularFraction scale(const AngularFraction& a, const Scalar& factor) const;

    AngularFraction derivative_p(const AngularFraction& a) const;
    AngularFraction derivative_q(const AngularFraction& a) const;

    // The angular operator acting in the p slot: -d^2/dp^2 + v(p), with the
    // potential kept in raw form v = v_num / W^2 (no scalar normalization),
    // so that denominators stay exact powers of W.
    AngularFraction angular_op_p(const AngularFraction& a) const;

    bool is_zero(const AngularFraction& a) const { return a.num.is_zero(); }
    bool equal(const AngularFraction& a, const AngularFraction& b) const {
        return is_zero(subtract(a, b));
    }

    // Guarded numeric evaluation (W(p) and W(q) must clear the relative
    // denominator guard).
    double eval(const AngularFraction& a, double p, double q,
                double den_guard = 1e-10) const;

    // --- separated functions -------------------------------------------

    // Canonical form: merge equal (r_pow, rho_pow), drop zero angular parts.
    SeparatedFunction canonical(const SeparatedFunction& f) const;
    bool is_zero(const SeparatedFunction& f) const;
    SeparatedFunction add(const SeparatedFunction& a, const SeparatedFunction& b) const;
    SeparatedFunction scale(const SeparatedFunction& f, const Scalar& factor) const;

    // The full polar operator applied to a single radial term:
    // L [a r^alpha rho^beta] = (-alpha^2 a + L_ang a) r^(alpha-2) rho^beta.
    RadialTerm apply_polar_op(const RadialTerm& term) const;
    SeparatedFunction apply_polar_op(const SeparatedFunction& f) const;

    // The derivative along the chord from the second point to the first,
    // (x - xi, d/dx), written in the polar frame of both points: the x part
    // is Euler's operator r d/dr, and the xi part expands into
    // rho cos(p - q) d/dr - (rho / r) sin(p - q) d/dp, so the result stays
    // inside the algebra. Verified against finite differences in the tests.
    SeparatedFunction directional_derivative(const SeparatedFunction& f) const;

    double eval(const SeparatedFunction& f, double r, double p, double rho, double q,
                double den_guard = 1e-10) const;

  private:
    // An integer literal in the operator's coefficient mode.
    Scalar integer(long value) const;

    AngularOperator op_;
    TrigPoly2 wp_, wq_;        // W in each slot
    TrigPoly2 dwp_, dwq_;      // their angle derivatives
    TrigPoly2 vnum_p_;         // raw potential numerator over W(p)^2
};

}  // namespace huygens
