#include "core/separated.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "core/errors.hpp"

namespace huygens {

SeparatedContext::SeparatedContext(AngularOperator op) : op_(std::move(op)) {
    const TrigPoly& w = op_.wronskian_poly();
    wp_ = TrigPoly2::embed_first(w);
    wq_ = TrigPoly2::embed_second(w);
    dwp_ = TrigPoly2::embed_first(w.derivative());
    dwq_ = TrigPoly2::embed_second(w.derivative());
    // Raw angular potential numerator: v = -2 (W'' W - W'^2) / W^2 without
    // any scalar renormalization, so v * a keeps denominator W^(wp+2).
    const TrigPoly w1 = w.derivative();
    const TrigPoly w2 = w1.derivative();
    vnum_p_ = TrigPoly2::embed_first((w2 * w - w1 * w1).scaled(integer(-2)));
}

Scalar SeparatedContext::integer(long value) const {
    return Scalar::integer_like(op_.data().mode() == Mode::exact
                                    ? Scalar::exact(1)
                                    : Scalar::floating(1.0, op_.data().precision_bits()),
                                value);
}

AngularFraction SeparatedContext::constant(const Scalar& value) const {
    return {TrigPoly2::constant(value), 0, 0};
}

AngularFraction SeparatedContext::raised(const AngularFraction& a, int wp, int wq) const {
    if (wp < a.wp || wq < a.wq)
        throw InvalidArgumentError("cannot lower denominator powers of a fraction");
    AngularFraction out = a;
    for (int i = a.wp; i < wp; ++i) out.num = out.num * wp_;
    for (int i = a.wq; i < wq; ++i) out.num = out.num * wq_;
    out.wp = wp;
    out.wq = wq;
    return out;
}

AngularFraction SeparatedContext::add(const AngularFraction& a,
                                      const AngularFraction& b) const {
    const int wp = std::max(a.wp, b.wp), wq = std::max(a.wq, b.wq);
    AngularFraction ra = raised(a, wp, wq), rb = raised(b, wp, wq);
    return {ra.num + rb.num, wp, wq};
}

AngularFraction SeparatedContext::subtract(const AngularFraction& a,
                                           const AngularFraction& b) const {
    const int wp = std::max(a.wp, b.wp), wq = std::max(a.wq, b.wq);
    AngularFraction ra = raised(a, wp, wq), rb = raised(b, wp, wq);
    return {ra.num - rb.num, wp, wq};
}

AngularFraction SeparatedContext::multiply(const AngularFraction& a,
                                           const AngularFraction& b) const {
    return {a.num * b.num, a.wp + b.wp, a.wq + b.wq};
}

AngularFraction SeparatedContext::multiply(const AngularFraction& a,
                                           const TrigPoly2& poly) const {
    return {a.num * poly, a.wp, a.wq};
}

AngularFraction SeparatedContext::scale(const AngularFraction& a,
                                        const Scalar& factor) const {
    return {a.num.scaled(factor), a.wp, a.wq};
}

AngularFraction SeparatedContext::derivative_p(const AngularFraction& a) const {
    if (a.wp == 0) return {a.num.derivative_first(), 0, a.wq};
    // d/dp [n / W^w] = (n' W - w n W') / W^(w+1).
    return {a.num.derivative_first() * wp_ - a.num.scaled(integer(a.wp)) * dwp_,
            a.wp + 1, a.wq};
}

AngularFraction SeparatedContext::derivative_q(const AngularFraction& a) const {
    if (a.wq == 0) return {a.num.derivative_second(), a.wp, 0};
    return {a.num.derivative_second() * wq_ - a.num.scaled(integer(a.wq)) * dwq_, a.wp,
            a.wq + 1};
}

AngularFraction SeparatedContext::angular_op_p(const AngularFraction& a) const {
    AngularFraction second = derivative_p(derivative_p(a));
    AngularFraction v_times = {a.num * vnum_p_, a.wp + 2, a.wq};
    AngularFraction minus_second = {-second.num, second.wp, second.wq};
    return add(minus_second, v_times);
}

double SeparatedContext::eval(const AngularFraction& a, double p, double q,
                              double den_guard) const {
    const TrigPoly& w = op_.wronskian_poly();
    const double scale = coefficient_scale(w);
    const double wp_val = w.eval(p), wq_val = w.eval(q);
    if (a.wp > 0 && std::fabs(wp_val) <= den_guard * scale)
        throw NearSingularError("fraction denominator vanishes in the first angle",
                                std::fabs(wp_val), op_.angular_distance(p));
    if (a.wq > 0 && std::fabs(wq_val) <= den_guard * scale)
        throw NearSingularError("fraction denominator vanishes in the second angle",
                                std::fabs(wq_val), op_.angular_distance(q));
    return a.num.eval(p, q) / std::pow(wp_val, a.wp) / std::pow(wq_val, a.wq);
}

SeparatedFunction SeparatedContext::canonical(const SeparatedFunction& f) const {
    std::map<std::pair<long, long>, AngularFraction> buckets;
    for (const RadialTerm& t : f.terms) {
        auto key = std::make_pair(t.r_pow, t.rho_pow);
        auto it = buckets.find(key);
        if (it == buckets.end())
            buckets.emplace(key, t.angular);
        else
            it->second = add(it->second, t.angular);
    }
    SeparatedFunction out;
    for (auto& [key, ang] : buckets)
        if (!is_zero(ang)) out.terms.push_back({std::move(ang), key.first, key.second});
    return out;
}

bool SeparatedContext::is_zero(const SeparatedFunction& f) const {
    return canonical(f).terms.empty();
}

SeparatedFunction SeparatedContext::add(const SeparatedFunction& a,
                                        const SeparatedFunction& b) const {
    SeparatedFunction merged = a;
    merged.terms.insert(merged.terms.end(), b.terms.begin(), b.terms.end());
    return canonical(merged);
}

SeparatedFunction SeparatedContext::scale(const SeparatedFunction& f,
                                          const Scalar& factor) const {
    SeparatedFunction out = f;
    for (RadialTerm& t : out.terms) t.angular = scale(t.angular, factor);
    return out;
}

RadialTerm SeparatedContext::apply_polar_op(const RadialTerm& term) const {
    // L = -d^2/dr^2 - (1/r) d/dr + (1/r^2) L_ang acting on a(p,q) r^alpha:
    // radial part contributes -alpha^2 a, the angular operator the rest.
    const long alpha = term.r_pow;
    AngularFraction out =
        add(scale(term.angular, integer(-alpha * alpha)), angular_op_p(term.angular));
    return {std::move(out), alpha - 2, term.rho_pow};
}

SeparatedFunction SeparatedContext::apply_polar_op(const SeparatedFunction& f) const {
    SeparatedFunction out;
    out.terms.reserve(f.terms.size());
    for (const RadialTerm& t : f.terms) out.terms.push_back(apply_polar_op(t));
    return canonical(out);
}

SeparatedFunction SeparatedContext::directional_derivative(const SeparatedFunction& f) const {
    // (x - xi, d/dx) on a(p,q) r^alpha rho^beta. In the polar frame of both
    // points, x.d/dx is Euler's operator r d/dr, while xi.d/dx expands as
    // rho cos(p-q) d/dr - (rho/r) sin(p-q) d/dp; subtracting gives
    //   alpha a r^alpha rho^beta
    //   + (-alpha cos(p-q) a + sin(p-q) da/dp) r^(alpha-1) rho^(beta+1).
    const Mode mode = op_.data().mode();
    const unsigned bits = op_.data().precision_bits();
    const TrigPoly2 cos_d = TrigPoly2::cos_difference(1, mode, bits);
    const TrigPoly2 sin_d = TrigPoly2::sin_difference(1, mode, bits);
    SeparatedFunction out;
    out.terms.reserve(2 * f.terms.size());
    for (const RadialTerm& t : f.terms) {
        out.terms.push_back({scale(t.angular, integer(t.r_pow)), t.r_pow, t.rho_pow});
        AngularFraction shifted =
            add(multiply(scale(t.angular, integer(-t.r_pow)), cos_d),
                multiply(derivative_p(t.angular), sin_d));
        out.terms.push_back({std::move(shifted), t.r_pow - 1, t.rho_pow + 1});
    }
    return canonical(out);
}

double SeparatedContext::eval(const SeparatedFunction& f, double r, double p, double rho,
                              double q, double den_guard) const {
    double acc = 0.0;
    for (const RadialTerm& t : f.terms)
        acc += eval(t.angular, p, q, den_guard) * std::pow(r, static_cast<double>(t.r_pow)) *
               std::pow(rho, static_cast<double>(t.rho_pow));
    return acc;
}

}  // namespace huygens
