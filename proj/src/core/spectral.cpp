#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/errors.hpp"

namespace huygens {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Bisection refinement of a sign change of f on [lo, hi].
template <class F>
double bisect(F&& f, double lo, double hi) {
    double flo = f(lo);
    for (int iter = 0; iter < 80 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((flo < 0) == (fmid < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double coefficient_scale(const TrigPoly& p) {
    double scale = 0.0;
    for (const auto& term : p.terms()) scale += std::fabs(term.coeff.to_double());
    return scale;
}

AngularOperator::AngularOperator(KData data)
    : data_(std::move(data)), w_(full_wronskian(data_)) {
    if (w_.is_zero())
        throw DegenerateWronskianError(
            "the Wronskian of the basis functions is identically zero");
    reduced_.reserve(data_.size());
    for (size_t i = 0; i < data_.size(); ++i)
        reduced_.push_back(reduced_wronskian(data_, {i}));

    const TrigPoly w1 = w_.derivative();
    const TrigPoly w2 = w1.derivative();
    // v = -2 (log W)'' = -2 (W'' W - W'^2) / W^2.
    TrigPoly num = (w2 * w_ - w1 * w1).scaled(Scalar::integer_like(
        data_.mode() == Mode::exact ? Scalar::exact(1)
                                    : Scalar::floating(1.0, data_.precision_bits()),
        -2));
    v_ = TrigRational(num, w_ * w_);
    w_fast_ = CompiledTrig(w_);
    vnum_fast_ = CompiledTrig(v_.num());
    vden_fast_ = CompiledTrig(v_.den());
    locate_singular_angles();
}

const TrigPoly& AngularOperator::reduced_poly(size_t i) const {
    if (i >= reduced_.size())
        throw InvalidArgumentError("eigenfunction index " + std::to_string(i) +
                                   " out of range");
    return reduced_[i];
}

TrigRational AngularOperator::eigenfunction(size_t i) const {
    return TrigRational(reduced_poly(i), w_);
}

Scalar AngularOperator::weight(size_t i) const {
    if (i >= data_.size())
        throw InvalidArgumentError("weight index " + std::to_string(i) + " out of range");
    mpz_class prod = 1;
    const long ki = data_.k()[i];
    for (size_t j = 0; j < data_.size(); ++j) {
        if (j == i) continue;
        const long kj = data_.k()[j];
        prod *= mpz_class(ki) * ki - mpz_class(kj) * kj;
    }
    Scalar exact = Scalar::exact(prod);
    return data_.mode() == Mode::exact ? exact : exact.to_floating(data_.precision_bits());
}

TrigRational AngularOperator::apply(const TrigRational& f) const {
    return -f.derivative().derivative() + v_ * f;
}

void AngularOperator::locate_singular_angles() {
    const double scale = w_fast_.coefficient_scale();
    const long freq = std::max(w_.max_frequency(), 1L);
    const size_t samples = static_cast<size_t>(freq) * 64;
    auto f = [this](double t) { return w_fast_.eval(t); };

    double prev_t = 0.0, prev_v = f(0.0);
    for (size_t i = 1; i <= samples; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
        const double val = f(t);
        if ((prev_v < 0) != (val < 0)) {
            zeros_.push_back(bisect(f, prev_t, t));
        } else if (std::fabs(val) < 1e-7 * scale) {
            // Possible even-multiplicity zero: refine the local minimum.
            double lo = prev_t, hi = std::min(t + (t - prev_t), kTwoPi);
            for (int iter = 0; iter < 100; ++iter) {
                const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                if (std::fabs(f(m1)) < std::fabs(f(m2)))
                    hi = m2;
                else
                    lo = m1;
            }
            const double t0 = 0.5 * (lo + hi);
            if (std::fabs(f(t0)) < 1e-10 * scale &&
                (zeros_.empty() || std::fabs(zeros_.back() - t0) > 1e-9))
                zeros_.push_back(t0);
        }
        prev_t = t;
        prev_v = val;
    }
    // Candidates cluster around each true zero: the refinement branches can
    // fire several times, and near a zero of multiplicity mu the acceptance
    // threshold |W| < 1e-10 * scale admits the whole window of width
    // ~ (1e-10)^(1/mu) (about 0.02 rad at mu = 6). Distinct zeros of the
    // Wronskians in scope sit at least ~0.15 rad apart, so collapsing
    // clusters narrower than 0.03 rad to their deepest member is safe.
    constexpr double kClusterGap = 0.03;
    std::sort(zeros_.begin(), zeros_.end());
    std::vector<double> merged;
    size_t i = 0;
    while (i < zeros_.size()) {
        double best = zeros_[i];
        double best_val = std::fabs(f(best));
        size_t j = i;
        while (j + 1 < zeros_.size() && zeros_[j + 1] - zeros_[j] < kClusterGap) {
            ++j;
            const double val = std::fabs(f(zeros_[j]));
            if (val < best_val) {
                best = zeros_[j];
                best_val = val;
            }
        }
        merged.push_back(best);
        i = j + 1;
    }
    // A zero at the period boundary shows up near both 0 and 2*pi.
    while (merged.size() > 1 && kTwoPi - merged.back() + merged.front() < kClusterGap)
        merged.pop_back();
    zeros_ = std::move(merged);
}

double AngularOperator::angular_distance(double phi) const {
    const std::vector<double>& zs = singular_angles();
    if (zs.empty()) return std::numeric_limits<double>::infinity();
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0) phi += kTwoPi;
    double best = std::numeric_limits<double>::infinity();
    for (double z : zs) {
        double d = std::fabs(phi - z);
        d = std::min(d, kTwoPi - d);
        best = std::min(best, d);
    }
    return best;
}

double AngularOperator::potential_value(double x1, double x2, double den_guard) const {
    const double r2 = x1 * x1 + x2 * x2;
    if (r2 == 0.0) throw OriginError("potential evaluation at the origin");
    const double phi = std::atan2(x2, x1);
    const double den = vden_fast_.eval(phi);
    if (std::fabs(den) <= den_guard * vden_fast_.coefficient_scale())
        throw NearSingularError("potential evaluated too close to a singular ray",
                                std::fabs(den), angular_distance(phi));
    return vnum_fast_.eval(phi) / den / r2;
}

mpq_class eval_even_harmonics(const TrigPoly& p, const mpq_class& cos2,
                              const mpq_class& sin2) {
    if (p.mode() != Mode::exact)
        throw ModeMismatchError("exact evaluation requires exact coefficients");
    // Tabulate cos(2j phi), sin(2j phi) by the rotation recurrence.
    const long top = p.max_frequency() / 2;
    std::vector<mpq_class> c(static_cast<size_t>(top) + 1), s(static_cast<size_t>(top) + 1);
    c[0] = 1;
    s[0] = 0;
    for (long j = 1; j <= top; ++j) {
        c[j] = c[j - 1] * cos2 - s[j - 1] * sin2;
        s[j] = s[j - 1] * cos2 + c[j - 1] * sin2;
    }
    mpq_class acc = 0;
    for (const auto& term : p.terms()) {
        if (term.freq % 2 != 0)
            throw InvalidArgumentError(
                "polynomial carries odd harmonics; even-parity evaluation impossible");
        const mpq_class& basis = term.kind == Kind::cos ? c[term.freq / 2] : s[term.freq / 2];
        acc += term.coeff.rational() * basis;
    }
    return acc;
}

mpq_class AngularOperator::potential_value_exact(const mpq_class& x1,
                                                 const mpq_class& x2) const {
    if (data_.mode() != Mode::exact)
        throw ModeMismatchError("exact potential evaluation requires exact data");
    const mpq_class r2 = x1 * x1 + x2 * x2;
    if (r2 == 0) throw OriginError("potential evaluation at the origin");
    // Double-angle values are rational in the point: cos(2 phi), sin(2 phi).
    const mpq_class cos2 = (x1 * x1 - x2 * x2) / r2;
    const mpq_class sin2 = 2 * x1 * x2 / r2;
    mpq_class den = eval_even_harmonics(v_.den(), cos2, sin2);
    if (den == 0)
        throw NearSingularError("point lies exactly on a singular ray", 0.0);
    mpq_class num = eval_even_harmonics(v_.num(), cos2, sin2);
    return num / den / r2;
}

TrigRational darboux_forward(const AngularOperator& extended, const TrigRational& f) {
    const TrigRational top = extended.eigenfunction(extended.data().size() - 1);
    return (top * f).derivative() / top;
}

TrigRational darboux_backward(const AngularOperator& extended, const TrigRational& f) {
    const TrigRational top = extended.eigenfunction(extended.data().size() - 1);
    return -(top * (f / top).derivative());
}

}  // namespace huygens
