#pragma once

#include <gmpxx.h>

#include <map>

#include "core/trigpoly.hpp"

namespace huygens {

// Gaussian rational a + b*i, the coefficient field of the Laurent model.
struct GaussRational {
    mpq_class re;
    mpq_class im;

    GaussRational() = default;
    GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational operator/(const GaussRational& o) const;
    GaussRational operator-() const { return {-re, -im}; }
    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
};

// Exact Laurent polynomial over the Gaussian rationals in z = e^{i phi}.
// This is the faithful ring model of exact TrigPoly values: the trig ring
// embeds via cos(n phi) = (z^n + z^-n)/2, sin(n phi) = -i (z^n - z^-n)/2,
// and the image is an integral domain with computable exact division —
// which the trig-side representation lacks. Used by the fraction-free
// Wronskian elimination.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly from_trig(const TrigPoly& p);  // exact mode only
    TrigPoly to_trig() const;  // requires a real-valued (conjugate-symmetric) value

    bool is_zero() const { return terms_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    // Exact quotient; throws InvalidArgumentError when the division leaves a
    // remainder (which would mean the elimination invariant was violated).
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    size_t term_count() const { return terms_.size(); }

  private:
    void set(long power, const GaussRational& value);

    std::map<long, GaussRational> terms_;  // power of z -> coefficient, no zeros
};

}  // namespace huygens
