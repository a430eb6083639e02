#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace huygens {

enum class Kind { cos, sin };

// A finite Fourier sum  sum_n a_n cos(n phi) + sum_n b_n sin(n phi)  with
// Scalar coefficients, kept canonical: frequencies are non-negative, no
// stored coefficient is zero, and sin of frequency 0 is never stored.
// Negative frequencies fold at construction via cos(-n) = cos(n),
// sin(-n) = -sin(n).
class TrigPoly {
  public:
    struct Term {
        Kind kind;
        long freq;
        Scalar coeff;
    };

    TrigPoly() : mode_(Mode::exact), prec_(0) {}

    static TrigPoly zero(Mode mode, unsigned precision_bits = 0);
    static TrigPoly constant(const Scalar& value);
    // Folds negative frequencies; sin(0) contributes nothing.
    static TrigPoly harmonic(Kind kind, long freq, const Scalar& coeff);
    // Public constructor with the strict contract: freq >= 0, one shared
    // scalar mode, and sin(0) with a nonzero coefficient rejected.
    static TrigPoly make(const std::vector<Term>& terms);
    // cos(k phi + phi0) for a phase given as a unit-circle point.
    static TrigPoly shifted_cosine(long freq, const UnitPoint& phase);

    Mode mode() const { return mode_; }
    unsigned precision_bits() const { return prec_; }

    TrigPoly operator+(const TrigPoly& rhs) const;
    TrigPoly operator-(const TrigPoly& rhs) const;
    TrigPoly operator*(const TrigPoly& rhs) const;
    TrigPoly operator-() const;
    TrigPoly scaled(const Scalar& factor) const;
    TrigPoly derivative(unsigned order = 1) const;

    bool is_zero() const;
    bool equals(const TrigPoly& rhs) const;

    double eval(double theta) const;
    // Evaluation at an angle stored as (cos, sin) of a circle point; exact in
    // exact mode via the rotation recurrence.
    Scalar eval_circle(const UnitPoint& point) const;
    // Evaluation at a floating-scalar angle (exact coefficients are converted
    // at the angle's precision).
    Scalar eval_floating(const Scalar& theta) const;

    long max_frequency() const;
    size_t term_count() const { return cos_.size() + sin_.size(); }
    std::vector<Term> terms() const;  // canonical order: cos by freq, then sin
    const Scalar* coefficient(Kind kind, long freq) const;  // nullptr if absent
    Scalar leading_coefficient() const;  // throws on zero polynomial

    // Scale used by the floating-mode zero test (largest input coefficient
    // magnitude seen while building this value).
    double float_scale() const { return float_scale_; }
    double float_zero_tolerance() const;

    std::string canonical_text() const;

  private:
    friend class TrigPoly2;

    void insert_folded(Kind kind, long freq, const Scalar& coeff);
    void prune();
    void require_compatible(const TrigPoly& rhs) const;
    void adopt_mode_of(const Scalar& coeff);

    std::map<long, Scalar> cos_;  // freq >= 0
    std::map<long, Scalar> sin_;  // freq >= 1
    Mode mode_;
    unsigned prec_;
    double float_scale_ = 0.0;
};

// Frozen double-precision image of a TrigPoly for repeated numeric
// evaluation: coefficients are converted once at construction and the
// harmonics come from the rotation recurrence, so one eval costs a single
// sin/cos pair plus a handful of multiplications.
class CompiledTrig {
  public:
    CompiledTrig() = default;
    explicit CompiledTrig(const TrigPoly& p);

    double eval(double theta) const;
    // Sum of absolute coefficient values (the reference scale for relative
    // denominator guards).
    double coefficient_scale() const { return scale_; }

  private:
    std::vector<std::pair<long, double>> cos_, sin_;  // ascending frequency
    long top_ = 0;
    double scale_ = 0.0;
};

}  // namespace huygens
