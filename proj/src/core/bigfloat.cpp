#include "core/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "core/errors.hpp"

namespace huygens {

namespace {

unsigned clamp_precision(unsigned bits) {
    return std::max(bits, BigFloat::kMinPrecision);
}

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
    mpfr_init2(v_, clamp_precision(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, unsigned precision_bits) {
    mpfr_init2(v_, clamp_precision(precision_bits));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_string(const std::string& text, unsigned precision_bits) {
    BigFloat out(precision_bits);
    if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw InvalidArgumentError("cannot parse floating value: " + text);
    return out;
}

BigFloat BigFloat::from_rational(mpq_srcptr value, unsigned precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_q(out.v_, value, MPFR_RNDN);
    return out;
}

namespace {

mpfr_prec_t result_prec(const mpfr_t& a, const mpfr_t& b) {
    return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

}  // namespace

BigFloat BigFloat::operator+(const BigFloat& rhs) const {
    BigFloat out(static_cast<unsigned>(result_prec(v_, rhs.v_)));
    mpfr_add(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-(const BigFloat& rhs) const {
    BigFloat out(static_cast<unsigned>(result_prec(v_, rhs.v_)));
    mpfr_sub(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator*(const BigFloat& rhs) const {
    BigFloat out(static_cast<unsigned>(result_prec(v_, rhs.v_)));
    mpfr_mul(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator/(const BigFloat& rhs) const {
    if (rhs.is_zero()) throw DivisionByZeroError("floating division by zero");
    BigFloat out(static_cast<unsigned>(result_prec(v_, rhs.v_)));
    mpfr_div(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision_bits());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision_bits());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos() const {
    BigFloat out(precision_bits());
    mpfr_cos(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sin() const {
    BigFloat out(precision_bits());
    mpfr_sin(out.v_, v_, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_string() const {
    // Round-trippable decimal: enough digits for the stored precision.
    const auto digits = static_cast<int>(mpfr_get_prec(v_) * 0.30103) + 3;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

}  // namespace huygens
