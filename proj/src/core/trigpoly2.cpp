#include "core/trigpoly2.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/trig_detail.hpp"

namespace huygens {

TrigPoly2 TrigPoly2::zero(Mode mode, unsigned precision_bits) {
    TrigPoly2 p;
    p.mode_ = mode;
    p.prec_ = (mode == Mode::floating) ? std::max(precision_bits, BigFloat::kMinPrecision) : 0;
    return p;
}

TrigPoly2 TrigPoly2::constant(const Scalar& value) {
    TrigPoly2 p = zero(value.mode(), value.precision_bits());
    p.insert_folded(Kind::cos, 0, Kind::cos, 0, value);
    p.prune();
    return p;
}

TrigPoly2 TrigPoly2::tensor(const TrigPoly& a, const TrigPoly& b) {
    if (a.mode() != b.mode())
        throw ModeMismatchError("tensor product between exact and floating polynomials");
    TrigPoly2 p = zero(a.mode(), std::max(a.precision_bits(), b.precision_bits()));
    p.float_scale_ = a.float_scale() * b.float_scale();
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            p.insert_folded(ta.kind, ta.freq, tb.kind, tb.freq, ta.coeff * tb.coeff);
    p.prune();
    return p;
}

TrigPoly2 TrigPoly2::embed_first(const TrigPoly& a) {
    TrigPoly2 p = zero(a.mode(), a.precision_bits());
    p.float_scale_ = a.float_scale();
    for (const auto& t : a.terms()) p.insert_folded(t.kind, t.freq, Kind::cos, 0, t.coeff);
    p.prune();
    return p;
}

TrigPoly2 TrigPoly2::embed_second(const TrigPoly& b) {
    TrigPoly2 p = zero(b.mode(), b.precision_bits());
    p.float_scale_ = b.float_scale();
    for (const auto& t : b.terms()) p.insert_folded(Kind::cos, 0, t.kind, t.freq, t.coeff);
    p.prune();
    return p;
}

TrigPoly2 TrigPoly2::cos_difference(long k, Mode mode, unsigned bits) {
    TrigPoly2 p = zero(mode, bits);
    const Scalar one = (mode == Mode::exact) ? Scalar::exact(1) : Scalar::floating(1.0, bits);
    p.float_scale_ = 1.0;
    if (k == 0) {
        p.insert_folded(Kind::cos, 0, Kind::cos, 0, one);
    } else {
        p.insert_folded(Kind::cos, k, Kind::cos, k, one);
        p.insert_folded(Kind::sin, k, Kind::sin, k, one);
    }
    p.prune();
    return p;
}

TrigPoly2 TrigPoly2::sin_difference(long k, Mode mode, unsigned bits) {
    TrigPoly2 p = zero(mode, bits);
    if (k == 0) return p;
    const Scalar one = (mode == Mode::exact) ? Scalar::exact(1) : Scalar::floating(1.0, bits);
    p.float_scale_ = 1.0;
    p.insert_folded(Kind::sin, k, Kind::cos, k, one);
    p.insert_folded(Kind::cos, k, Kind::sin, k, -one);
    p.prune();
    return p;
}

void TrigPoly2::insert_folded(Kind ka, long fa, Kind kb, long fb, const Scalar& coeff) {
    if (mode_ == Mode::floating) {
        const double mag = std::fabs(coeff.to_double());
        if (mag > float_scale_) float_scale_ = mag;
    }
    Scalar value = coeff;
    if (fa < 0) {
        fa = -fa;
        if (ka == Kind::sin) value = -value;
    }
    if (fb < 0) {
        fb = -fb;
        if (kb == Kind::sin) value = -value;
    }
    if ((ka == Kind::sin && fa == 0) || (kb == Kind::sin && fb == 0)) return;
    const Key key{ka, fa, kb, fb};
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) it->second += value;
}

void TrigPoly2::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

void TrigPoly2::require_compatible(const TrigPoly2& rhs) const {
    if (mode_ != rhs.mode_)
        throw ModeMismatchError("operation between exact and floating two-angle polynomials");
}

TrigPoly2 TrigPoly2::operator+(const TrigPoly2& rhs) const {
    require_compatible(rhs);
    TrigPoly2 out = *this;
    out.float_scale_ = std::max(float_scale_, rhs.float_scale_);
    for (const auto& [k, c] : rhs.terms_) out.insert_folded(k.kind_a, k.freq_a, k.kind_b, k.freq_b, c);
    out.prune();
    return out;
}

TrigPoly2 TrigPoly2::operator-(const TrigPoly2& rhs) const { return *this + (-rhs); }

TrigPoly2 TrigPoly2::operator-() const {
    TrigPoly2 out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

TrigPoly2 TrigPoly2::operator*(const TrigPoly2& rhs) const {
    require_compatible(rhs);
    TrigPoly2 out = zero(mode_, std::max(prec_, rhs.prec_));
    out.float_scale_ = float_scale_ * rhs.float_scale_;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            // Expand per angle; the two 1/2 factors combine into 1/4.
            const Scalar product = (ca * cb).halved().halved();
            for (const auto& ea : detail::expand_product(ka.kind_a, ka.freq_a, kb.kind_a, kb.freq_a)) {
                for (const auto& eb :
                     detail::expand_product(ka.kind_b, ka.freq_b, kb.kind_b, kb.freq_b)) {
                    Scalar value = product;
                    if (ea.sign * eb.sign < 0) value = -value;
                    out.insert_folded(ea.kind, ea.freq, eb.kind, eb.freq, value);
                }
            }
        }
    }
    out.prune();
    return out;
}

TrigPoly2 TrigPoly2::scaled(const Scalar& factor) const {
    if (factor.mode() != mode_)
        throw ModeMismatchError("scaling a two-angle polynomial with a scalar of the other mode");
    TrigPoly2 out = *this;
    if (mode_ == Mode::floating) out.float_scale_ = float_scale_ * std::fabs(factor.to_double());
    for (auto& [k, c] : out.terms_) c = c * factor;
    out.prune();
    return out;
}

TrigPoly2 TrigPoly2::derivative_first() const {
    TrigPoly2 out = zero(mode_, prec_);
    out.float_scale_ = float_scale_;
    for (const auto& [k, c] : terms_) {
        if (k.freq_a == 0) continue;  // d/dp of a pure-q factor
        const Scalar scaled_coeff = c * Scalar::integer_like(c, k.freq_a);
        if (k.kind_a == Kind::cos)
            out.insert_folded(Kind::sin, k.freq_a, k.kind_b, k.freq_b, -scaled_coeff);
        else
            out.insert_folded(Kind::cos, k.freq_a, k.kind_b, k.freq_b, scaled_coeff);
    }
    out.prune();
    return out;
}

TrigPoly2 TrigPoly2::derivative_second() const {
    TrigPoly2 out = zero(mode_, prec_);
    out.float_scale_ = float_scale_;
    for (const auto& [k, c] : terms_) {
        if (k.freq_b == 0) continue;
        const Scalar scaled_coeff = c * Scalar::integer_like(c, k.freq_b);
        if (k.kind_b == Kind::cos)
            out.insert_folded(k.kind_a, k.freq_a, Kind::sin, k.freq_b, -scaled_coeff);
        else
            out.insert_folded(k.kind_a, k.freq_a, Kind::cos, k.freq_b, scaled_coeff);
    }
    out.prune();
    return out;
}

TrigPoly2 TrigPoly2::swapped_angles() const {
    TrigPoly2 out = zero(mode_, prec_);
    out.float_scale_ = float_scale_;
    for (const auto& [k, c] : terms_) out.insert_folded(k.kind_b, k.freq_b, k.kind_a, k.freq_a, c);
    out.prune();
    return out;
}

TrigPoly TrigPoly2::diagonal() const {
    TrigPoly out = TrigPoly::zero(mode_, prec_);
    for (const auto& [k, c] : terms_) {
        // {cos|sin}(f_a p) * {cos|sin}(f_b p) expanded back to single-angle form.
        const Scalar product = c.halved();
        for (const auto& e : detail::expand_product(k.kind_a, k.freq_a, k.kind_b, k.freq_b)) {
            Scalar value = product;
            if (e.sign < 0) value = -value;
            out.insert_folded(e.kind, e.freq, value);
        }
    }
    out.prune();
    return out;
}

bool TrigPoly2::is_zero() const {
    if (terms_.empty()) return true;
    if (mode_ == Mode::exact) return false;
    const double tol =
        std::pow(10.0, -0.25 * static_cast<double>(prec_)) * std::max(float_scale_, 1e-300);
    for (const auto& [k, c] : terms_)
        if (std::fabs(c.to_double()) >= tol) return false;
    return true;
}

bool TrigPoly2::equals(const TrigPoly2& rhs) const {
    require_compatible(rhs);
    if (mode_ == Mode::exact) return terms_ == rhs.terms_;
    return (*this - rhs).is_zero();
}

double TrigPoly2::eval(double theta_a, double theta_b) const {
    double acc = 0.0;
    for (const auto& [k, c] : terms_) {
        const double fa = static_cast<double>(k.freq_a) * theta_a;
        const double fb = static_cast<double>(k.freq_b) * theta_b;
        const double va = (k.kind_a == Kind::cos) ? std::cos(fa) : std::sin(fa);
        const double vb = (k.kind_b == Kind::cos) ? std::cos(fb) : std::sin(fb);
        acc += c.to_double() * va * vb;
    }
    return acc;
}

Scalar TrigPoly2::eval_circle(const UnitPoint& a, const UnitPoint& b) const {
    if (a.c.mode() != mode_ || b.c.mode() != mode_)
        throw ModeMismatchError("circle-point evaluation with mismatched scalar mode");
    auto harmonics = [](const UnitPoint& u, long top) {
        std::vector<std::pair<Scalar, Scalar>> out;  // (cos n t, sin n t)
        out.reserve(static_cast<size_t>(top) + 1);
        out.emplace_back(u.c.one_like(), u.c.zero_like());
        for (long n = 1; n <= top; ++n) {
            const auto& [cp, sp] = out.back();
            out.emplace_back(u.c * cp - u.s * sp, u.s * cp + u.c * sp);
        }
        return out;
    };
    const auto ha = harmonics(a, max_frequency_first());
    const auto hb = harmonics(b, max_frequency_second());
    Scalar acc = a.c.zero_like();
    for (const auto& [k, c] : terms_) {
        const Scalar& va = (k.kind_a == Kind::cos) ? ha[static_cast<size_t>(k.freq_a)].first
                                                   : ha[static_cast<size_t>(k.freq_a)].second;
        const Scalar& vb = (k.kind_b == Kind::cos) ? hb[static_cast<size_t>(k.freq_b)].first
                                                   : hb[static_cast<size_t>(k.freq_b)].second;
        acc += c * va * vb;
    }
    return acc;
}

std::vector<TrigPoly2::Term> TrigPoly2::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({k, c});
    return out;
}

long TrigPoly2::max_frequency_first() const {
    long top = 0;
    for (const auto& [k, c] : terms_) top = std::max(top, k.freq_a);
    return top;
}

long TrigPoly2::max_frequency_second() const {
    long top = 0;
    for (const auto& [k, c] : terms_) top = std::max(top, k.freq_b);
    return top;
}

Scalar TrigPoly2::leading_coefficient() const {
    if (terms_.empty())
        throw InvalidArgumentError("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

namespace {

std::string basis2_text(const TrigPoly2::Key& k) {
    auto one_angle = [](Kind kind, long freq, char angle) -> std::string {
        if (freq == 0) return "";
        std::ostringstream os;
        os << (kind == Kind::cos ? "cos(" : "sin(");
        if (freq != 1) os << freq;
        os << angle << ")";
        return os.str();
    };
    const std::string a = one_angle(k.kind_a, k.freq_a, 'p');
    const std::string b = one_angle(k.kind_b, k.freq_b, 'q');
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

}  // namespace

std::string TrigPoly2::canonical_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Scalar mag = c.abs();
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        const std::string basis = basis2_text(k);
        if (basis.empty())
            os << mag.to_string();
        else if (mag.is_one())
            os << basis;
        else
            os << mag.to_string() << "*" << basis;
        first = false;
    }
    return os.str();
}

}  // namespace huygens
