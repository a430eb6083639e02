#include "core/hadamard.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <utility>

#include "core/chebyshev.hpp"
#include "core/errors.hpp"

namespace huygens {

namespace {

Scalar unit_in_mode(const KData& data) {
    return data.mode() == Mode::exact ? Scalar::exact(1)
                                      : Scalar::floating(1.0, data.precision_bits());
}

}  // namespace

HadamardTable::HadamardTable(KData data) : op_(AngularOperator(std::move(data))) {
    const KData& d = op_.data();
    const TrigPoly& w = op_.wronskian_poly();
    wprod_ = TrigPoly2::tensor(w, w);
    weighted_.reserve(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        weighted_.push_back(
            TrigPoly2::tensor(op_.reduced_poly(i), op_.reduced_poly(i))
                .scaled(op_.weight(i)));
    const long km = max_order();
    s_.reserve(static_cast<size_t>(km) + 1);
    for (long nu = 0; nu <= km; ++nu) s_.push_back(sigma_numerator_raw(nu));
    if (!s_[0].equals(wprod_))
        throw Error("coefficient table rejected: zeroth coefficient is not one");
    for (long nu = km + 1; nu <= km + 3; ++nu)
        if (!sigma_numerator_raw(nu).is_zero())
            throw Error("coefficient table rejected: order " + std::to_string(nu) +
                        " fails to vanish past the top frequency");
}

const TrigPoly2& HadamardTable::sigma_numerator(long nu) const {
    if (nu < 0 || nu > max_order())
        throw InvalidArgumentError("coefficient order " + std::to_string(nu) +
                                   " outside the stored range");
    return s_[static_cast<size_t>(nu)];
}

TrigPoly2 HadamardTable::sigma_numerator_raw(long nu) const {
    const KData& d = op_.data();
    if (nu < 0) throw InvalidArgumentError("negative coefficient order");
    TrigPoly2 acc = TrigPoly2::zero(d.mode(), d.precision_bits());
    const TrigPoly2 cosdiff =
        TrigPoly2::cos_difference(1, d.mode(), d.precision_bits());
    for (size_t i = 0; i < d.size(); ++i) {
        std::vector<mpz_class> der = chebyshev_derivative(
            static_cast<unsigned>(d.k()[i]), static_cast<unsigned>(nu));
        if (der.empty()) continue;
        acc = acc + weighted_[i] * chebyshev_eval(der, cosdiff);
    }
    Scalar factor = unit_in_mode(d);
    const Scalar minus_two = Scalar::integer_like(factor, -2);
    for (long j = 0; j < nu; ++j) factor = factor * minus_two;
    return acc.scaled(factor);
}

TrigRational2 HadamardTable::sigma(long nu) const {
    return TrigRational2(sigma_numerator(nu), wprod_);
}

std::array<double, 2> HadamardTable::checked_polar(const std::array<double, 2>& pt,
                                                   double den_guard) const {
    const double r = std::hypot(pt[0], pt[1]);
    if (r == 0.0)
        throw OriginError("polar evaluation requested at the origin");
    const double phi = std::atan2(pt[1], pt[0]);
    const double wval = op_.wronskian_value(phi);
    if (std::fabs(wval) <= den_guard * op_.wronskian_scale())
        throw NearSingularError("evaluation angle lies near a singular ray",
                                std::fabs(wval), op_.angular_distance(phi));
    return {r, phi};
}

double HadamardTable::coefficient_sum(double r, double p, double rho, double q,
                                      double weight) const {
    const double den = op_.wronskian_value(p) * op_.wronskian_value(q);
    double acc = 0.0;
    double radial = 1.0;
    for (long nu = 0; nu <= max_order(); ++nu) {
        acc += s_[static_cast<size_t>(nu)].eval(p, q) / den * radial;
        radial *= weight / (r * rho);
    }
    return acc;
}

double HadamardTable::u_value(const std::array<double, 2>& x,
                              const std::array<double, 2>& xi, long nu,
                              double den_guard) const {
    if (nu < 0) throw InvalidArgumentError("negative coefficient order");
    const auto [r, p] = checked_polar(x, den_guard);
    const auto [rho, q] = checked_polar(xi, den_guard);
    if (nu > max_order()) return 0.0;
    return s_[static_cast<size_t>(nu)].eval(p, q) /
           (op_.wronskian_value(p) * op_.wronskian_value(q) *
            std::pow(r * rho, static_cast<double>(nu)));
}

double HadamardTable::heat_value(const std::array<double, 2>& x,
                                 const std::array<double, 2>& xi, double t,
                                 double den_guard) const {
    if (!(t > 0.0)) throw NonPositiveTimeError("heat kernel requires t > 0");
    const auto [r, p] = checked_polar(x, den_guard);
    const auto [rho, q] = checked_polar(xi, den_guard);
    const double dx = x[0] - xi[0], dy = x[1] - xi[1];
    const double gaussian =
        std::exp(-(dx * dx + dy * dy) / (4.0 * t)) / (4.0 * M_PI * t);
    return gaussian * coefficient_sum(r, p, rho, q, t);
}

double HadamardTable::ba_value(const std::array<double, 2>& x,
                               const std::array<double, 2>& xi,
                               double den_guard) const {
    const auto [r, p] = checked_polar(x, den_guard);
    const auto [rho, q] = checked_polar(xi, den_guard);
    const double dot = x[0] * xi[0] + x[1] * xi[1];
    return std::exp(dot) * coefficient_sum(r, p, rho, q, 0.5);
}

HadamardTable HadamardTable::perturbed(long nu, const Scalar& factor) const {
    if (nu < 0 || nu > max_order())
        throw InvalidArgumentError("perturbation order outside the stored range");
    HadamardTable copy = *this;
    copy.s_[static_cast<size_t>(nu)] =
        copy.s_[static_cast<size_t>(nu)].scaled(factor);
    return copy;
}

SeparatedFunction log_term(const SeparatedContext& ctx) {
    const AngularOperator& op = ctx.op();
    const KData& d = op.data();
    const Scalar half = unit_in_mode(d).halved();
    SeparatedFunction f;
    for (size_t i = 0; i < d.size(); ++i) {
        TrigPoly2 prod = TrigPoly2::tensor(op.reduced_poly(i), op.reduced_poly(i))
                             .scaled(op.weight(i));
        AngularFraction a{std::move(prod), 1, 1};
        const long k = d.k()[i];
        if (k == 0) {
            f.terms.push_back({std::move(a), 0, 0});
        } else {
            AngularFraction halved = ctx.scale(a, half);
            f.terms.push_back({halved, k, -k});
            f.terms.push_back({std::move(halved), -k, k});
        }
    }
    return f;
}

std::vector<AngularFraction> log_term_series(const SeparatedContext& ctx) {
    const AngularOperator& op = ctx.op();
    const KData& d = op.data();
    const long km = d.k_max();
    const Scalar unit = unit_in_mode(d);

    std::vector<TrigPoly2> cpow;
    cpow.reserve(static_cast<size_t>(km) + 1);
    cpow.push_back(TrigPoly2::constant(unit));
    const TrigPoly2 cosdiff =
        TrigPoly2::cos_difference(1, d.mode(), d.precision_bits());
    for (long j = 1; j <= km; ++j) cpow.push_back(cpow.back() * cosdiff);

    std::vector<AngularFraction> series(
        static_cast<size_t>(km) + 1,
        ctx.from_poly(TrigPoly2::zero(d.mode(), d.precision_bits())));
    for (size_t i = 0; i < d.size(); ++i) {
        const std::vector<mpz_class> cheb =
            chebyshev_coeffs(static_cast<unsigned>(d.k()[i]));
        const TrigPoly2 prod =
            TrigPoly2::tensor(op.reduced_poly(i), op.reduced_poly(i))
                .scaled(op.weight(i));
        for (unsigned n = 0; n < cheb.size(); ++n) {
            if (cheb[n] == 0) continue;
            for (unsigned nu = 0; nu <= n; ++nu) {
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), n, nu);
                mpq_class coeff(cheb[n] * binom, mpz_class(1) << nu);
                coeff.canonicalize();
                AngularFraction term{
                    (prod * cpow[n - nu]).scaled(Scalar::exact(coeff).to_mode_of(unit)),
                    1, 1};
                series[nu] = ctx.add(series[nu], term);
            }
        }
    }
    return series;
}

}  // namespace huygens
