#include "core/laurent.hpp"

#include <vector>

#include "core/errors.hpp"

namespace huygens {

GaussRational GaussRational::operator/(const GaussRational& o) const {
    mpq_class norm = o.re * o.re + o.im * o.im;
    if (norm == 0) throw DivisionByZeroError("Gaussian-rational division by zero");
    return {(re * o.re + im * o.im) / norm, (im * o.re - re * o.im) / norm};
}

void LaurentPoly::set(long power, const GaussRational& value) {
    if (value.is_zero())
        terms_.erase(power);
    else
        terms_[power] = value;
}

LaurentPoly LaurentPoly::from_trig(const TrigPoly& p) {
    if (p.mode() != Mode::exact)
        throw ModeMismatchError("Laurent model requires exact coefficients");
    LaurentPoly out;
    for (const auto& term : p.terms()) {
        const mpq_class& c = term.coeff.rational();
        if (term.freq == 0) {
            // Constant: canonical form stores at most one cos(0) term.
            out.set(0, GaussRational(c, 0));
            continue;
        }
        const mpq_class half = c / 2;
        GaussRational pos, neg;
        if (term.kind == Kind::cos) {
            pos = GaussRational(half, 0);  // cos n -> (z^n + z^-n)/2
            neg = GaussRational(half, 0);
        } else {
            pos = GaussRational(0, -half);  // sin n -> -i/2 z^n + i/2 z^-n
            neg = GaussRational(0, half);
        }
        auto add = [&out](long power, const GaussRational& v) {
            auto it = out.terms_.find(power);
            out.set(power, it == out.terms_.end() ? v : it->second + v);
        };
        add(term.freq, pos);
        add(-term.freq, neg);
    }
    return out;
}

TrigPoly LaurentPoly::to_trig() const {
    std::vector<TrigPoly::Term> terms;
    for (const auto& [power, coeff] : terms_) {
        if (power < 0) continue;  // handled together with the +n partner
        if (power == 0) {
            if (coeff.im != 0)
                throw InvalidArgumentError("Laurent value is not real: imaginary constant");
            if (coeff.re != 0)
                terms.push_back({Kind::cos, 0, Scalar::exact(mpq_class(coeff.re))});
            continue;
        }
        auto it = terms_.find(-power);
        GaussRational mirror = it == terms_.end() ? GaussRational() : it->second;
        // Reality demands c_{-n} = conj(c_n).
        if (!(mirror.re == coeff.re && mirror.im == -coeff.im))
            throw InvalidArgumentError("Laurent value is not real: broken conjugate symmetry");
        mpq_class a = 2 * coeff.re;   // cos coefficient
        mpq_class b = -2 * coeff.im;  // sin coefficient
        if (a != 0) terms.push_back({Kind::cos, power, Scalar::exact(a)});
        if (b != 0) terms.push_back({Kind::sin, power, Scalar::exact(b)});
    }
    // Negative powers with no positive partner would break symmetry too.
    for (const auto& [power, coeff] : terms_) {
        if (power < 0 && !terms_.count(-power))
            throw InvalidArgumentError("Laurent value is not real: unmatched negative power");
    }
    return TrigPoly::make(terms);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [power, coeff] : o.terms_) {
        auto it = out.terms_.find(power);
        out.set(power, it == out.terms_.end() ? coeff : it->second + coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [power, coeff] : out.terms_) coeff = -coeff;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [pa, ca] : terms_) {
        for (const auto& [pb, cb] : o.terms_) {
            const long p = pa + pb;
            GaussRational v = ca * cb;
            auto it = out.terms_.find(p);
            out.set(p, it == out.terms_.end() ? v : it->second + v);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("Laurent division by zero");
    if (is_zero()) return {};

    // Shift both operands so the divisor becomes an ordinary polynomial with
    // nonzero constant term; the shift difference re-enters at the end.
    const long lo_num = terms_.begin()->first;
    const long lo_den = divisor.terms_.begin()->first;

    auto densify = [](const LaurentPoly& p, long lo) {
        const long hi = p.terms_.rbegin()->first;
        std::vector<GaussRational> v(static_cast<size_t>(hi - lo) + 1);
        for (const auto& [power, coeff] : p.terms_) v[static_cast<size_t>(power - lo)] = coeff;
        return v;
    };
    std::vector<GaussRational> rem = densify(*this, lo_num);
    const std::vector<GaussRational> den = densify(divisor, lo_den);

    if (rem.size() < den.size())
        throw InvalidArgumentError("inexact Laurent division: quotient degree negative");

    std::vector<GaussRational> quot(rem.size() - den.size() + 1);
    const GaussRational& lead = den.back();
    for (size_t step = quot.size(); step-- > 0;) {
        GaussRational q = rem[step + den.size() - 1] / lead;
        quot[step] = q;
        if (q.is_zero()) continue;
        for (size_t j = 0; j < den.size(); ++j)
            rem[step + j] = rem[step + j] - q * den[j];
    }
    for (const GaussRational& r : rem)
        if (!r.is_zero())
            throw InvalidArgumentError("inexact Laurent division: nonzero remainder");

    LaurentPoly out;
    const long base = lo_num - lo_den;
    for (size_t i = 0; i < quot.size(); ++i)
        if (!quot[i].is_zero()) out.terms_[base + static_cast<long>(i)] = quot[i];
    return out;
}

}  // namespace huygens
