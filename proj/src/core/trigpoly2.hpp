#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "core/trigpoly.hpp"

namespace huygens {

// A finite Fourier sum in two independent angles (written p and q in text
// output): terms  coeff * {cos|sin}(f_a p) * {cos|sin}(f_b q)  in canonical
// form (non-negative frequencies, no zero coefficients, sin of frequency 0
// never stored in either slot).
class TrigPoly2 {
  public:
    struct Key {
        Kind kind_a;
        long freq_a;
        Kind kind_b;
        long freq_b;

        bool operator<(const Key& o) const {
            return std::tie(kind_a, freq_a, kind_b, freq_b) <
                   std::tie(o.kind_a, o.freq_a, o.kind_b, o.freq_b);
        }
        bool operator==(const Key& o) const {
            return std::tie(kind_a, freq_a, kind_b, freq_b) ==
                   std::tie(o.kind_a, o.freq_a, o.kind_b, o.freq_b);
        }
    };

    struct Term {
        Key key;
        Scalar coeff;
    };

    TrigPoly2() : mode_(Mode::exact), prec_(0) {}

    static TrigPoly2 zero(Mode mode, unsigned precision_bits = 0);
    static TrigPoly2 constant(const Scalar& value);
    // Tensor product a(p) * b(q).
    static TrigPoly2 tensor(const TrigPoly& a, const TrigPoly& b);
    static TrigPoly2 embed_first(const TrigPoly& a);   // a(p) * 1
    static TrigPoly2 embed_second(const TrigPoly& b);  // 1 * b(q)
    // cos(k (p - q)) = cos(kp)cos(kq) + sin(kp)sin(kq).
    static TrigPoly2 cos_difference(long k, Mode mode = Mode::exact, unsigned bits = 0);
    // sin(k (p - q)) = sin(kp)cos(kq) - cos(kp)sin(kq).
    static TrigPoly2 sin_difference(long k, Mode mode = Mode::exact, unsigned bits = 0);

    Mode mode() const { return mode_; }
    unsigned precision_bits() const { return prec_; }

    TrigPoly2 operator+(const TrigPoly2& rhs) const;
    TrigPoly2 operator-(const TrigPoly2& rhs) const;
    TrigPoly2 operator*(const TrigPoly2& rhs) const;
    TrigPoly2 operator-() const;
    TrigPoly2 scaled(const Scalar& factor) const;
    TrigPoly2 derivative_first() const;   // d/dp
    TrigPoly2 derivative_second() const;  // d/dq
    TrigPoly2 swapped_angles() const;     // p <-> q

    // Substitution q := p, re-expanded to a single-angle polynomial.
    TrigPoly diagonal() const;

    bool is_zero() const;
    bool equals(const TrigPoly2& rhs) const;

    double eval(double theta_a, double theta_b) const;
    Scalar eval_circle(const UnitPoint& a, const UnitPoint& b) const;

    size_t term_count() const { return terms_.size(); }
    std::vector<Term> terms() const;
    long max_frequency_first() const;
    long max_frequency_second() const;
    Scalar leading_coefficient() const;  // throws on zero polynomial
    double float_scale() const { return float_scale_; }

    std::string canonical_text() const;

  private:
    void insert_folded(Kind ka, long fa, Kind kb, long fb, const Scalar& coeff);
    void prune();
    void require_compatible(const TrigPoly2& rhs) const;

    std::map<Key, Scalar> terms_;
    Mode mode_;
    unsigned prec_;
    double float_scale_ = 0.0;
};

}  // namespace huygens
