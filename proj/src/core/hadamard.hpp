#pragma once

#include <array>
#include <vector>

#include "core/kdata.hpp"
#include "core/separated.hpp"
#include "core/spectral.hpp"
#include "core/trigpoly2.hpp"
#include "core/trigrational.hpp"

namespace huygens {

// Exact table of heat-coefficient numerators for one operator. In polar
// coordinates x = (r, p), xi = (rho, q), the nu-th coefficient is
//
//     U_nu(x, xi) = sigma_nu(p, q) / (r rho)^nu,
//     sigma_nu    = s_nu(p, q) / (W(p) W(q)),
//
// and the table stores the two-angle numerators s_nu for nu = 0 .. k_max.
// Construction verifies two structural facts and refuses to produce a table
// that violates them: s_0 == W(p) W(q) (the zeroth coefficient is one), and
// s_nu == 0 for the three orders past k_max (the expansion terminates).
class HadamardTable {
  public:
    explicit HadamardTable(KData data);

    const KData& data() const { return op_.data(); }
    const AngularOperator& op() const { return op_; }
    long max_order() const { return data().k_max(); }

    // Numerator s_nu; defined for 0 <= nu <= max_order().
    const TrigPoly2& sigma_numerator(long nu) const;
    // The same construction evaluated at an arbitrary order; zero beyond
    // max_order(). Used to confirm termination independently of the cache.
    TrigPoly2 sigma_numerator_raw(long nu) const;
    // sigma_nu as a rational function of the two angles.
    TrigRational2 sigma(long nu) const;

    // U_nu at Cartesian points. Throws OriginError at x == 0 or xi == 0 and
    // NearSingularError when either angle lies too close to a zero line of W.
    double u_value(const std::array<double, 2>& x, const std::array<double, 2>& xi,
                   long nu, double den_guard = 1e-10) const;
    // The finite heat kernel at time t > 0 (NonPositiveTimeError otherwise).
    double heat_value(const std::array<double, 2>& x, const std::array<double, 2>& xi,
                      double t, double den_guard = 1e-10) const;
    // The shared eigenfunction: exp((x, xi)) times the 2^-nu-weighted sum of
    // the coefficients.
    double ba_value(const std::array<double, 2>& x, const std::array<double, 2>& xi,
                    double den_guard = 1e-10) const;

    // Copy with the nu-th numerator scaled by the given factor. Produces a
    // deliberately wrong table for negative-control checks.
    HadamardTable perturbed(long nu, const Scalar& factor) const;

  private:
    AngularOperator op_;
    TrigPoly2 wprod_;                 // W(p) W(q)
    std::vector<TrigPoly2> weighted_; // c_i * (reduced_i x reduced_i)
    std::vector<TrigPoly2> s_;        // numerators for nu = 0 .. max_order()

    // (radius, angle) with origin and singular-ray guards.
    std::array<double, 2> checked_polar(const std::array<double, 2>& pt,
                                        double den_guard) const;
    // Sum over nu of sigma_nu(p, q) * weight^nu / (r rho)^nu.
    double coefficient_sum(double r, double p, double rho, double q,
                           double weight) const;
};

// The exact generating solution for the context's operator, written as a
// separated function over the angular-fraction algebra:
//
//     sum_i c_i (reduced_i x reduced_i) / (W W) * ((r/rho)^k_i + (rho/r)^k_i) / 2,
//
// with the k_i = 0 summand appearing once. Each radial term is annihilated
// by the polar operator individually, and the function equals one on the
// diagonal r == rho, p == q.
SeparatedFunction log_term(const SeparatedContext& ctx);

// Coefficients of the expansion of the generating solution in powers of the
// squared distance: entry nu is the angular fraction a_nu with
//
//     log_term == sum_nu a_nu(p, q) * gamma^nu / (r rho)^nu,
//     gamma    == r^2 + rho^2 - 2 r rho cos(p - q).
//
// Collected by binomial expansion of the Chebyshev arguments; satisfies
// a_nu * (-4)^nu * nu! == sigma_nu, which is the independent consistency
// check against HadamardTable.
std::vector<AngularFraction> log_term_series(const SeparatedContext& ctx);

}  // namespace huygens
