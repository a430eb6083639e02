#include "core/trigpoly.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "core/errors.hpp"
#include "core/trig_detail.hpp"

namespace huygens {

namespace detail {

std::array<Expanded, 2> expand_product(Kind ka, long fa, Kind kb, long fb) {
    const long sum = fa + fb;
    const long diff = fa - fb;
    if (ka == Kind::cos && kb == Kind::cos)
        return {{{Kind::cos, diff, 1}, {Kind::cos, sum, 1}}};
    if (ka == Kind::sin && kb == Kind::sin)
        return {{{Kind::cos, diff, 1}, {Kind::cos, sum, -1}}};
    if (ka == Kind::sin && kb == Kind::cos)
        return {{{Kind::sin, sum, 1}, {Kind::sin, diff, 1}}};
    // cos * sin
    return {{{Kind::sin, sum, 1}, {Kind::sin, diff, -1}}};
}

}  // namespace detail

TrigPoly TrigPoly::zero(Mode mode, unsigned precision_bits) {
    TrigPoly p;
    p.mode_ = mode;
    p.prec_ = (mode == Mode::floating) ? std::max(precision_bits, BigFloat::kMinPrecision) : 0;
    return p;
}

void TrigPoly::adopt_mode_of(const Scalar& coeff) {
    mode_ = coeff.mode();
    prec_ = coeff.precision_bits();
}

TrigPoly TrigPoly::constant(const Scalar& value) {
    TrigPoly p;
    p.adopt_mode_of(value);
    p.insert_folded(Kind::cos, 0, value);
    p.prune();
    return p;
}

TrigPoly TrigPoly::harmonic(Kind kind, long freq, const Scalar& coeff) {
    TrigPoly p;
    p.adopt_mode_of(coeff);
    p.insert_folded(kind, freq, coeff);
    p.prune();
    return p;
}

TrigPoly TrigPoly::make(const std::vector<Term>& terms) {
    TrigPoly p;
    bool mode_set = false;
    for (const Term& t : terms) {
        if (t.freq < 0) throw InvalidArgumentError("tp_make: negative frequency");
        if (t.kind == Kind::sin && t.freq == 0 && !t.coeff.is_zero())
            throw InvalidArgumentError("tp_make: sin with frequency 0");
        if (!mode_set) {
            p.adopt_mode_of(t.coeff);
            mode_set = true;
        } else if (t.coeff.mode() != p.mode_) {
            throw ModeMismatchError("tp_make: mixed scalar modes");
        }
        p.insert_folded(t.kind, t.freq, t.coeff);
    }
    p.prune();
    return p;
}

TrigPoly TrigPoly::shifted_cosine(long freq, const UnitPoint& phase) {
    // cos(k phi + phi0) = cos(phi0) cos(k phi) - sin(phi0) sin(k phi)
    TrigPoly p;
    p.adopt_mode_of(phase.c);
    p.insert_folded(Kind::cos, freq, phase.c);
    p.insert_folded(Kind::sin, freq, -phase.s);
    p.prune();
    return p;
}

void TrigPoly::insert_folded(Kind kind, long freq, const Scalar& coeff) {
    if (mode_ == Mode::floating) {
        const double mag = std::fabs(coeff.to_double());
        if (mag > float_scale_) float_scale_ = mag;
    }
    Scalar value = coeff;
    if (freq < 0) {
        freq = -freq;
        if (kind == Kind::sin) value = -value;
    }
    if (kind == Kind::sin && freq == 0) return;  // sin(0) == 0
    auto& table = (kind == Kind::cos) ? cos_ : sin_;
    auto [it, inserted] = table.emplace(freq, value);
    if (!inserted) it->second += value;
}

void TrigPoly::prune() {
    for (auto* table : {&cos_, &sin_}) {
        for (auto it = table->begin(); it != table->end();) {
            if (it->second.is_zero())
                it = table->erase(it);
            else
                ++it;
        }
    }
}

void TrigPoly::require_compatible(const TrigPoly& rhs) const {
    if (mode_ != rhs.mode_)
        throw ModeMismatchError("operation between exact and floating trig polynomials");
}

TrigPoly TrigPoly::operator+(const TrigPoly& rhs) const {
    require_compatible(rhs);
    TrigPoly out = *this;
    out.float_scale_ = std::max(float_scale_, rhs.float_scale_);
    for (const auto& [f, c] : rhs.cos_) out.insert_folded(Kind::cos, f, c);
    for (const auto& [f, c] : rhs.sin_) out.insert_folded(Kind::sin, f, c);
    out.prune();
    return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& rhs) const { return *this + (-rhs); }

TrigPoly TrigPoly::operator-() const {
    TrigPoly out = *this;
    for (auto& [f, c] : out.cos_) c = -c;
    for (auto& [f, c] : out.sin_) c = -c;
    return out;
}

TrigPoly TrigPoly::operator*(const TrigPoly& rhs) const {
    require_compatible(rhs);
    TrigPoly out = zero(mode_, std::max(prec_, rhs.prec_));
    out.float_scale_ = std::max(float_scale_ * rhs.float_scale_, 0.0);
    auto accumulate = [&](Kind ka, long fa, const Scalar& ca, Kind kb, long fb,
                          const Scalar& cb) {
        const Scalar product = (ca * cb).halved();
        for (const auto& e : detail::expand_product(ka, fa, kb, fb)) {
            Scalar value = product;
            if (e.sign < 0) value = -value;
            out.insert_folded(e.kind, e.freq, value);
        }
    };
    for (const auto& [fa, ca] : cos_) {
        for (const auto& [fb, cb] : rhs.cos_) accumulate(Kind::cos, fa, ca, Kind::cos, fb, cb);
        for (const auto& [fb, cb] : rhs.sin_) accumulate(Kind::cos, fa, ca, Kind::sin, fb, cb);
    }
    for (const auto& [fa, ca] : sin_) {
        for (const auto& [fb, cb] : rhs.cos_) accumulate(Kind::sin, fa, ca, Kind::cos, fb, cb);
        for (const auto& [fb, cb] : rhs.sin_) accumulate(Kind::sin, fa, ca, Kind::sin, fb, cb);
    }
    out.prune();
    return out;
}

TrigPoly TrigPoly::scaled(const Scalar& factor) const {
    if (factor.mode() != mode_)
        throw ModeMismatchError("scaling a trig polynomial with a scalar of the other mode");
    TrigPoly out = *this;
    if (mode_ == Mode::floating)
        out.float_scale_ = float_scale_ * std::fabs(factor.to_double());
    for (auto& [f, c] : out.cos_) c = c * factor;
    for (auto& [f, c] : out.sin_) c = c * factor;
    out.prune();
    return out;
}

TrigPoly TrigPoly::derivative(unsigned order) const {
    TrigPoly current = *this;
    for (unsigned step = 0; step < order; ++step) {
        TrigPoly next = zero(mode_, prec_);
        next.float_scale_ = current.float_scale_;
        for (const auto& [f, c] : current.cos_) {
            if (f == 0) continue;
            next.insert_folded(Kind::sin, f, -(c * Scalar::integer_like(c, f)));
        }
        for (const auto& [f, c] : current.sin_)
            next.insert_folded(Kind::cos, f, c * Scalar::integer_like(c, f));
        next.prune();
        current = std::move(next);
    }
    return current;
}

double TrigPoly::float_zero_tolerance() const {
    // One documented rule: coefficients below 10^-(bits/4) relative to the
    // largest input coefficient count as zero.
    const double bits = (mode_ == Mode::floating) ? static_cast<double>(prec_) : 0.0;
    return std::pow(10.0, -0.25 * bits);
}

bool TrigPoly::is_zero() const {
    if (cos_.empty() && sin_.empty()) return true;
    if (mode_ == Mode::exact) return false;
    const double tol = float_zero_tolerance() * std::max(float_scale_, 1e-300);
    for (const auto* table : {&cos_, &sin_})
        for (const auto& [f, c] : *table)
            if (std::fabs(c.to_double()) >= tol) return false;
    return true;
}

bool TrigPoly::equals(const TrigPoly& rhs) const {
    require_compatible(rhs);
    if (mode_ == Mode::exact) return cos_ == rhs.cos_ && sin_ == rhs.sin_;
    return (*this - rhs).is_zero();
}

double TrigPoly::eval(double theta) const {
    double acc = 0.0;
    for (const auto& [f, c] : cos_) acc += c.to_double() * std::cos(static_cast<double>(f) * theta);
    for (const auto& [f, c] : sin_) acc += c.to_double() * std::sin(static_cast<double>(f) * theta);
    return acc;
}

CompiledTrig::CompiledTrig(const TrigPoly& p) {
    for (const auto& term : p.terms()) {
        const double c = term.coeff.to_double();
        (term.kind == Kind::cos ? cos_ : sin_).emplace_back(term.freq, c);
        scale_ += std::fabs(c);
        top_ = std::max(top_, term.freq);
    }
}

double CompiledTrig::eval(double theta) const {
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    double acc = 0.0;
    double cn = 1.0, sn = 0.0;
    size_t ic = 0, is = 0;
    for (long n = 0; n <= top_; ++n) {
        if (n > 0) {
            const double c = cn * c1 - sn * s1;
            const double s = sn * c1 + cn * s1;
            cn = c;
            sn = s;
        }
        while (ic < cos_.size() && cos_[ic].first == n) acc += cos_[ic++].second * cn;
        while (is < sin_.size() && sin_[is].first == n) acc += sin_[is++].second * sn;
    }
    return acc;
}

Scalar TrigPoly::eval_circle(const UnitPoint& point) const {
    if (point.c.mode() != mode_)
        throw ModeMismatchError("circle-point evaluation with mismatched scalar mode");
    const long top = max_frequency();
    // cos(n t), sin(n t) by the rotation recurrence; exact in exact mode.
    std::vector<Scalar> cs, ss;
    cs.reserve(static_cast<size_t>(top) + 1);
    ss.reserve(static_cast<size_t>(top) + 1);
    cs.push_back(point.c.one_like());
    ss.push_back(point.c.zero_like());
    for (long n = 1; n <= top; ++n) {
        cs.push_back(point.c * cs.back() - point.s * ss.back());
        ss.push_back(point.s * cs[static_cast<size_t>(n) - 1] + point.c * ss[static_cast<size_t>(n) - 1]);
    }
    Scalar acc = point.c.zero_like();
    for (const auto& [f, c] : cos_) acc += c * cs[static_cast<size_t>(f)];
    for (const auto& [f, c] : sin_) acc += c * ss[static_cast<size_t>(f)];
    return acc;
}

Scalar TrigPoly::eval_floating(const Scalar& theta) const {
    if (theta.mode() != Mode::floating)
        throw ModeMismatchError("eval_floating requires a floating angle (use eval_circle for exact)");
    const unsigned bits = theta.precision_bits();
    Scalar acc = Scalar::floating(0.0, bits);
    auto angle_of = [&](long f) {
        return theta * Scalar::floating(static_cast<double>(f), bits);
    };
    for (const auto& [f, c] : cos_) {
        const Scalar cf = (mode_ == Mode::exact) ? c.to_floating(bits) : c;
        acc += cf * Scalar::floating(angle_of(f).big_float().cos());
    }
    for (const auto& [f, c] : sin_) {
        const Scalar cf = (mode_ == Mode::exact) ? c.to_floating(bits) : c;
        acc += cf * Scalar::floating(angle_of(f).big_float().sin());
    }
    return acc;
}

long TrigPoly::max_frequency() const {
    long top = 0;
    if (!cos_.empty()) top = std::max(top, cos_.rbegin()->first);
    if (!sin_.empty()) top = std::max(top, sin_.rbegin()->first);
    return top;
}

std::vector<TrigPoly::Term> TrigPoly::terms() const {
    std::vector<Term> out;
    out.reserve(term_count());
    for (const auto& [f, c] : cos_) out.push_back({Kind::cos, f, c});
    for (const auto& [f, c] : sin_) out.push_back({Kind::sin, f, c});
    return out;
}

const Scalar* TrigPoly::coefficient(Kind kind, long freq) const {
    const auto& table = (kind == Kind::cos) ? cos_ : sin_;
    auto it = table.find(freq);
    return it == table.end() ? nullptr : &it->second;
}

Scalar TrigPoly::leading_coefficient() const {
    if (!sin_.empty()) return sin_.rbegin()->second;
    if (!cos_.empty()) return cos_.rbegin()->second;
    throw InvalidArgumentError("leading coefficient of the zero polynomial");
}

namespace {

void append_term_text(std::ostream& os, bool first, const Scalar& coeff, const std::string& basis) {
    const bool negative = coeff.sign() < 0;
    const Scalar mag = coeff.abs();
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    if (basis.empty()) {
        os << mag.to_string();
    } else if (mag.is_one()) {
        os << basis;
    } else {
        os << mag.to_string() << "*" << basis;
    }
}

std::string basis_text(Kind kind, long freq, char angle) {
    if (freq == 0) return kind == Kind::cos ? "" : "0";
    std::ostringstream os;
    os << (kind == Kind::cos ? "cos(" : "sin(");
    if (freq != 1) os << freq;
    os << angle << ")";
    return os.str();
}

}  // namespace

std::string TrigPoly::canonical_text() const {
    if (cos_.empty() && sin_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : cos_) {
        append_term_text(os, first, c, basis_text(Kind::cos, f, 'p'));
        first = false;
    }
    for (const auto& [f, c] : sin_) {
        append_term_text(os, first, c, basis_text(Kind::sin, f, 'p'));
        first = false;
    }
    return os.str();
}

}  // namespace huygens
