#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/kdata.hpp"
#include "core/trigrational.hpp"
#include "core/wronskian.hpp"

namespace huygens {

// The angular Schrodinger operator attached to a k-sequence: the full
// potential separates as V(x) = v(phi)/r^2 and this class owns the angular
// part v together with the Wronskian data it is built from. Everything,
// including the singular-angle list, is computed at construction; instances
// are immutable and freely copyable/shareable afterwards.
class AngularOperator {
  public:
    explicit AngularOperator(KData data);

    const KData& data() const { return data_; }
    // Full Wronskian W of the basis functions (never identically zero here;
    // degenerate data is rejected at construction).
    const TrigPoly& wronskian_poly() const { return w_; }
    // Wronskian with the i-th basis function omitted.
    const TrigPoly& reduced_poly(size_t i) const;

    // v(phi) = -2 (W'' W - W'^2) / W^2, the angular potential.
    const TrigRational& potential() const { return v_; }

    // The i-th eigenfunction: reduced Wronskian over the full one. Its
    // eigenvalue under apply() is k_i^2.
    TrigRational eigenfunction(size_t i) const;

    // The weight attached to the i-th eigenfunction in the closed-form
    // sums: product over j != i of (k_i^2 - k_j^2); empty product is 1.
    Scalar weight(size_t i) const;

    // The operator itself: f -> -f'' + v f.
    TrigRational apply(const TrigRational& f) const;

    // Angles in [0, 2*pi) where W vanishes (the potential's singular rays).
    const std::vector<double>& singular_angles() const { return zeros_; }
    // Distance from the angle to the nearest singular ray (wraps around);
    // returns +infinity when W has no zeros.
    double angular_distance(double phi) const;

    // Potential at a Cartesian point, guarded against the singular rays:
    // |W^2(phi)| must exceed guard * (sum of |coefficients|).
    double potential_value(double x1, double x2, double den_guard = 1e-10) const;

    // Fast numeric Wronskian evaluation (compiled double coefficients) and
    // its coefficient scale, for repeated denominator guards.
    double wronskian_value(double phi) const { return w_fast_.eval(phi); }
    double wronskian_scale() const { return w_fast_.coefficient_scale(); }

    // Exact potential value at a rational Cartesian point. Works because
    // the numerator and denominator of v only carry even harmonics, which
    // are rational functions of the point (see even-parity note in the
    // implementation).
    mpq_class potential_value_exact(const mpq_class& x1, const mpq_class& x2) const;

  private:
    void locate_singular_angles();

    KData data_;
    TrigPoly w_;
    std::vector<TrigPoly> reduced_;
    TrigRational v_;
    std::vector<double> zeros_;
    CompiledTrig w_fast_, vnum_fast_, vden_fast_;
};

// Darboux step operators built from an operator extended by one extra k
// entry; the transforming function is the extended operator's top
// eigenfunction e = eigenfunction(m+1).
//   forward:  f -> (e f)' / e      (raises the base operator to the extension)
//   backward: f -> -e (f / e)'     (its formal adjoint, lowers back)
TrigRational darboux_forward(const AngularOperator& extended, const TrigRational& f);
TrigRational darboux_backward(const AngularOperator& extended, const TrigRational& f);

// Exact evaluation of an even-harmonic trigonometric polynomial at a point
// given by the exact values of cos(2 phi) and sin(2 phi). Throws if the
// polynomial carries odd harmonics.
mpq_class eval_even_harmonics(const TrigPoly& p, const mpq_class& cos2,
                              const mpq_class& sin2);

// Sum of |coefficient| of a polynomial, the scale reference for relative
// denominator guards.
double coefficient_scale(const TrigPoly& p);

}  // namespace huygens
