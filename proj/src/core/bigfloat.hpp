#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <string>

namespace huygens {

// RAII wrapper around mpfr_t. Precision is fixed at construction; binary
// operations produce a result at the larger precision of the two operands.
class BigFloat {
  public:
    static constexpr unsigned kMinPrecision = 64;

    explicit BigFloat(unsigned precision_bits = kMinPrecision);
    BigFloat(double value, unsigned precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_string(const std::string& text, unsigned precision_bits);
    // Exact value rounded once to the target precision.
    static BigFloat from_rational(mpq_srcptr value, unsigned precision_bits);

    unsigned precision_bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    BigFloat operator+(const BigFloat& rhs) const;
    BigFloat operator-(const BigFloat& rhs) const;
    BigFloat operator*(const BigFloat& rhs) const;
    BigFloat operator/(const BigFloat& rhs) const;
    BigFloat operator-() const;

    bool operator==(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) == 0; }
    bool operator<(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) < 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    BigFloat abs() const;

    BigFloat cos() const;
    BigFloat sin() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string() const;

    const mpfr_t& raw() const { return v_; }

  private:
    mpfr_t v_;
};

}  // namespace huygens
