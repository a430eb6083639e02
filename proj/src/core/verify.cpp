#include "core/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "core/chebyshev.hpp"
#include "core/errors.hpp"
#include "core/separated.hpp"
#include "core/trigrational.hpp"
#include "core/wronskian.hpp"

namespace huygens {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Numeric thresholds, pinned here so every caller sees the same criteria.
constexpr double kOracleTolLow = 1e-6;   // oracle agreement, orders <= 2
constexpr double kOracleTolHigh = 1e-4;  // oracle agreement, order 3
constexpr double kHeatTol = 1e-6;        // relative heat-equation residual
constexpr double kRichardsonFactor = 8.0;
// The convergence-factor test needs the residual to be dominated by
// truncation. Evaluating the kernel's coefficients in doubles leaves a
// relative error of order 1e-13 which the second-difference stencils
// amplify by 1/h^2, so residuals below this size are rounding noise and
// the factor carries no information there.
constexpr double kHeatNoiseFloor = 2e-7;
constexpr double kProbeSpreadTol = 1e-5;  // eigen-ratio constancy, relative
// Generated samples keep this margin (radians) from singular rays — more
// than bare admissibility so finite differences stay well conditioned —
// and sources for rays a bit more, since the whole segment must clear it.
constexpr double kSampleMargin = 0.25;
constexpr double kSourceMargin = 0.3;
// Heat samples need yet more room: the kernel's coefficients carry poles of
// order up to the Wronskian zero multiplicity on the singular rays, and the
// sixth derivative steering the fourth-order truncation grows accordingly.
constexpr double kHeatMargin = 0.35;
// Reject generated samples where the kernel's polynomial bracket is smaller
// than this: relative residuals degenerate at zeros of the kernel.
constexpr double kBracketFloor = 0.2;

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string truncated(std::string text, size_t limit = 160) {
    if (text.size() <= limit) return text;
    text.resize(limit);
    return text + " ...";
}

Scalar unit_scalar(const KData& data) {
    return data.mode() == Mode::exact ? Scalar::exact(1)
                                      : Scalar::floating(1.0, data.precision_bits());
}

Scalar integer_scalar(const KData& data, long value) {
    return Scalar::integer_like(unit_scalar(data), value);
}

std::string poly2_witness(const TrigPoly2& p) {
    std::ostringstream os;
    os << "residual has " << p.term_count() << " terms, value " << p.eval(0.9, 0.4)
       << " at angles (0.9, 0.4); canonical form: " << truncated(p.canonical_text());
    return os.str();
}

void fail_with(VerifyReport& rep, std::string witness) {
    rep.status = VerifyStatus::fail;
    rep.witness = std::move(witness);
}

// The unity sum cleared of denominators, optionally with one weight scaled
// (the hook the negative control uses).
TrigPoly2 unity_difference(const AngularOperator& op, std::optional<size_t> scaled_index,
                           const Scalar& factor) {
    const KData& d = op.data();
    TrigPoly2 acc = TrigPoly2::zero(d.mode(), d.precision_bits());
    for (size_t i = 0; i < d.size(); ++i) {
        Scalar c = op.weight(i);
        if (scaled_index && *scaled_index == i) c = c * factor;
        acc = acc + TrigPoly2::tensor(op.reduced_poly(i), op.reduced_poly(i)).scaled(c) *
                        TrigPoly2::cos_difference(d.k()[i], d.mode(), d.precision_bits());
    }
    return acc - TrigPoly2::tensor(op.wronskian_poly(), op.wronskian_poly());
}

KData extend_by(const KData& data, long k_next) {
    std::vector<long> k = data.k();
    k.push_back(k_next);
    std::vector<UnitPoint> phases = data.phases();
    phases.push_back(data.mode() == Mode::exact
                         ? UnitPoint::one()
                         : UnitPoint(Scalar::floating(1.0, data.precision_bits()),
                                     Scalar::floating(0.0, data.precision_bits())));
    return KData(std::move(k), std::move(phases));
}

// Shared body of the plain and rescaled transport checks: for each order nu,
// the difference (chord derivative + nu)[w^nu U_nu] + w L[w^(nu-1) U_(nu-1)]
// must canonicalize to zero.
VerifyReport transport_impl(const HadamardTable& table, std::string name,
                            const Scalar& per_order) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = std::move(name);
    rep.status = VerifyStatus::exact_pass;
    const KData& d = table.data();
    SeparatedContext ctx(table.op());
    auto coefficient = [&](long nu) {
        Scalar scale_nu = unit_scalar(d);
        for (long j = 0; j < nu; ++j) scale_nu = scale_nu * per_order;
        SeparatedFunction f;
        f.terms.push_back(
            {ctx.scale({table.sigma_numerator(nu), 1, 1}, scale_nu), -nu, -nu});
        return f;
    };
    for (long nu = 1; nu <= table.max_order() && rep.passed(); ++nu) {
        SeparatedFunction lhs =
            ctx.add(ctx.directional_derivative(coefficient(nu)),
                    ctx.scale(coefficient(nu), integer_scalar(d, nu)));
        SeparatedFunction minus_rhs =
            ctx.scale(ctx.apply_polar_op(coefficient(nu - 1)), per_order);
        SeparatedFunction diff = ctx.canonical(ctx.add(lhs, minus_rhs));
        ++rep.samples;
        if (!diff.terms.empty()) {
            const RadialTerm& t = diff.terms.front();
            std::ostringstream os;
            os << "order " << nu << ": difference survives with " << diff.terms.size()
               << " radial terms; term r^" << t.r_pow << " rho^" << t.rho_pow
               << " has numerator " << truncated(t.angular.num.canonical_text());
            fail_with(rep, os.str());
        }
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

template <class F>
double laplacian_fd4(F&& f, const std::array<double, 2>& x, double h) {
    const double f0 = f(x);
    double acc = 0.0;
    for (int axis = 0; axis < 2; ++axis) {
        auto shifted = [&](double step) {
            std::array<double, 2> y = x;
            y[axis] += step;
            return f(y);
        };
        acc += (-shifted(2 * h) + 16 * shifted(h) - 30 * f0 + 16 * shifted(-h) -
                shifted(-2 * h)) /
               (12 * h * h);
    }
    return acc;
}

std::string point_text(const std::array<double, 2>& pt) {
    std::ostringstream os;
    os << "(" << pt[0] << ", " << pt[1] << ")";
    return os.str();
}

}  // namespace

VerifyReport check_unity(const KData& data) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "unity";
    rep.status = VerifyStatus::exact_pass;
    AngularOperator op(data);
    TrigPoly2 diff = unity_difference(op, std::nullopt, unit_scalar(data));
    rep.samples = static_cast<long>(data.size());
    if (!diff.is_zero())
        fail_with(rep, "weighted cosine sum minus Wronskian product: " + poly2_witness(diff));
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_eigen(const KData& data) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "eigen";
    rep.status = VerifyStatus::exact_pass;
    AngularOperator op(data);
    for (size_t i = 0; i < data.size() && rep.passed(); ++i) {
        TrigRational psi = op.eigenfunction(i);
        const long k = data.k()[i];
        TrigRational diff = op.apply(psi) - psi.scaled(integer_scalar(data, k * k));
        ++rep.samples;
        if (!diff.is_zero()) {
            std::ostringstream os;
            os << "entry " << i << ": L psi - " << k * k
               << " psi has a nonzero numerator with " << diff.num().term_count()
               << " terms";
            fail_with(rep, os.str());
        }
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_darboux(const KData& data, long k_next) {
    Stopwatch sw;
    if (k_next <= data.k_max())
        throw InvalidArgumentError("extension entry must exceed the current top entry");
    VerifyReport rep;
    rep.check_name = "darboux";
    rep.status = VerifyStatus::exact_pass;
    AngularOperator base(data);
    AngularOperator ext(extend_by(data, k_next));
    const long next_sq = k_next * k_next;
    for (size_t i = 0; i < data.size() && rep.passed(); ++i) {
        const long k = data.k()[i];
        TrigRational lowering =
            darboux_backward(ext, ext.eigenfunction(i)) + base.eigenfunction(i);
        ++rep.samples;
        if (!lowering.is_zero()) {
            std::ostringstream os;
            os << "lowering step at entry " << i
               << ": image plus base eigenfunction is nonzero ("
               << lowering.num().term_count() << " numerator terms)";
            fail_with(rep, os.str());
            break;
        }
        TrigRational raising =
            darboux_forward(ext, base.eigenfunction(i)) -
            ext.eigenfunction(i).scaled(integer_scalar(data, next_sq - k * k));
        ++rep.samples;
        if (!raising.is_zero()) {
            std::ostringstream os;
            os << "raising step at entry " << i << ": image differs from "
               << (next_sq - k * k) << " times the extended eigenfunction";
            fail_with(rep, os.str());
        }
    }
    if (rep.passed()) {
        // Factorization on a generic rational function, not an eigenfunction.
        TrigRational f(TrigPoly::harmonic(Kind::cos, 2, unit_scalar(data)) +
                           TrigPoly::constant(integer_scalar(data, 3)),
                       base.wronskian_poly());
        TrigRational diff = darboux_backward(ext, darboux_forward(ext, f)) +
                            f.scaled(integer_scalar(data, next_sq)) - base.apply(f);
        ++rep.samples;
        if (!diff.is_zero())
            fail_with(rep,
                      "lowering after raising plus " + std::to_string(next_sq) +
                          " does not reproduce the operator on a generic function");
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_cramer(const KData& data) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "cramer";
    rep.status = VerifyStatus::exact_pass;
    const TrigPoly w_full = full_wronskian(data);
    const size_t last = data.size() - 1;
    const TrigPoly w_last = reduced_wronskian(data, {last});
    if (w_full.is_zero() || w_last.is_zero())
        throw DegenerateWronskianError("basis functions are linearly dependent");
    for (size_t i = 0; i < last && rep.passed(); ++i) {
        TrigPoly w_i = reduced_wronskian(data, {i});
        TrigPoly w_pair = reduced_wronskian(data, {i, last});
        TrigRational lhs = TrigRational(w_i, w_last).derivative();
        TrigRational rhs(w_full * w_pair, w_last * w_last);
        ++rep.samples;
        if (!(lhs - rhs).is_zero()) {
            std::ostringstream os;
            os << "entry " << i
               << ": derivative of the Wronskian quotient differs from the "
                  "doubly-reduced form";
            fail_with(rep, os.str());
        }
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_transport_symbolic(const HadamardTable& table) {
    return transport_impl(table, "transport-symbolic", unit_scalar(table.data()));
}

VerifyReport check_transport_rescaled(const HadamardTable& table, const Scalar& per_order) {
    Scalar w = per_order.to_mode_of(unit_scalar(table.data()));
    return transport_impl(table, "transport-rescaled(" + per_order.to_string() + ")", w);
}

VerifyReport check_vanishing(const HadamardTable& table) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "vanishing";
    rep.status = VerifyStatus::exact_pass;
    for (long nu = table.max_order() + 1; nu <= table.max_order() + 3 && rep.passed();
         ++nu) {
        TrigPoly2 s = table.sigma_numerator_raw(nu);
        ++rep.samples;
        if (!s.is_zero())
            fail_with(rep, "order " + std::to_string(nu) + ": " + poly2_witness(s));
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_goursat(const KData& data) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "goursat";
    rep.status = VerifyStatus::exact_pass;
    SeparatedContext ctx{AngularOperator(data)};
    SeparatedFunction gen = log_term(ctx);
    for (const RadialTerm& term : gen.terms) {
        RadialTerm image = ctx.apply_polar_op(term);
        ++rep.samples;
        if (!ctx.is_zero(image.angular)) {
            std::ostringstream os;
            os << "generating term r^" << term.r_pow << " rho^" << term.rho_pow
               << " escapes the kernel; image numerator " <<
                truncated(image.angular.num.canonical_text());
            fail_with(rep, os.str());
            break;
        }
    }
    if (rep.passed()) {
        std::vector<AngularFraction> series = log_term_series(ctx);
        AngularFraction one = ctx.constant(unit_scalar(data));
        ++rep.samples;
        if (!ctx.equal(series.at(0), one))
            fail_with(rep,
                      "diagonal value of the generating solution is not one; "
                      "zeroth expansion numerator " +
                          truncated(series.at(0).num.canonical_text()));
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_series(const HadamardTable& table) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "series";
    rep.status = VerifyStatus::exact_pass;
    const KData& d = table.data();
    SeparatedContext ctx(table.op());
    std::vector<AngularFraction> series = log_term_series(ctx);
    for (long nu = 0; nu <= table.max_order() && rep.passed(); ++nu) {
        mpz_class factorial;
        mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(nu));
        mpz_class base(-4), power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(nu));
        Scalar factor = Scalar::exact(mpz_class(power * factorial)).to_mode_of(unit_scalar(d));
        AngularFraction lhs = ctx.scale(series.at(static_cast<size_t>(nu)), factor);
        AngularFraction rhs{table.sigma_numerator(nu), 1, 1};
        ++rep.samples;
        if (!ctx.equal(lhs, rhs)) {
            std::ostringstream os;
            os << "order " << nu
               << ": expansion coefficient times (-4)^nu nu! differs from the table; "
                  "difference numerator "
               << truncated(ctx.subtract(lhs, rhs).num.canonical_text());
            fail_with(rep, os.str());
        }
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

// --- numeric checks ----------------------------------------------------------

std::vector<std::array<double, 2>> admissible_points(const AngularOperator& op, int count,
                                                     unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> radius(0.7, 1.5);
    std::vector<std::array<double, 2>> out;
    long attempts = 0;
    const long cap = 1000L * std::max(count, 1);
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > cap)
            throw Error("sample generation exhausted its attempt budget");
        const double phi = angle(rng);
        if (op.angular_distance(phi) < kSampleMargin) continue;
        const double r = radius(rng);
        out.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return out;
}

std::vector<RaySample> admissible_rays(const AngularOperator& op, int count, unsigned seed,
                                       const OracleSettings& settings) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> sweep(-0.08, 0.08);
    std::uniform_real_distribution<double> rho_dist(0.7, 1.3);
    std::uniform_real_distribution<double> stretch(1.3, 2.2);
    std::vector<RaySample> out;
    long attempts = 0;
    const long cap = 1000L * std::max(count, 1);
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > cap)
            throw Error("ray generation exhausted its attempt budget");
        const double q = angle(rng);
        if (op.angular_distance(q) < kSourceMargin) continue;
        const double p = q + sweep(rng);
        if (op.angular_distance(p) < kSampleMargin) continue;
        const double rho = rho_dist(rng);
        const double r = rho * stretch(rng);
        RaySample ray{{r * std::cos(p), r * std::sin(p)},
                      {rho * std::cos(q), rho * std::sin(q)}};
        TransportOracle probe(op, ray.xi, settings);
        if (!probe.admissible(ray.x)) continue;
        out.push_back(ray);
    }
    return out;
}

std::vector<HeatSample> heat_samples(const HadamardTable& table, int count, unsigned seed) {
    const AngularOperator& op = table.op();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> radius(0.8, 1.3);
    std::uniform_real_distribution<double> time(0.6, 1.2);
    std::vector<HeatSample> out;
    long attempts = 0;
    const long cap = 1000L * std::max(count, 1);
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > cap)
            throw Error("heat sample generation exhausted its attempt budget");
        const double p = angle(rng), q = angle(rng);
        if (op.angular_distance(p) < kHeatMargin) continue;
        if (op.angular_distance(q) < kHeatMargin) continue;
        const double r = radius(rng), rho = radius(rng);
        HeatSample s{{r * std::cos(p), r * std::sin(p)},
                     {rho * std::cos(q), rho * std::sin(q)},
                     time(rng)};
        const double dx = s.x[0] - s.xi[0], dy = s.x[1] - s.xi[1];
        const double bracket = table.heat_value(s.x, s.xi, s.t) * (4.0 * M_PI * s.t) *
                               std::exp((dx * dx + dy * dy) / (4.0 * s.t));
        if (std::fabs(bracket) < kBracketFloor) continue;
        out.push_back(s);
    }
    return out;
}

std::vector<std::array<double, 2>> ba_probe_points(const HadamardTable& table,
                                                   const std::array<double, 2>& xi,
                                                   int count, unsigned seed) {
    const AngularOperator& op = table.op();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> radius(0.7, 1.5);
    std::vector<std::array<double, 2>> out;
    long attempts = 0;
    const long cap = 1000L * std::max(count, 1);
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > cap)
            throw Error("probe point generation exhausted its attempt budget");
        const double p = angle(rng);
        if (op.angular_distance(p) < kSampleMargin) continue;
        const double r = radius(rng);
        const std::array<double, 2> x{r * std::cos(p), r * std::sin(p)};
        const double bracket =
            table.ba_value(x, xi) * std::exp(-(x[0] * xi[0] + x[1] * xi[1]));
        if (std::fabs(bracket) < kBracketFloor) continue;
        out.push_back(x);
    }
    return out;
}

VerifyReport check_transport_oracle(const HadamardTable& table,
                                    const std::vector<RaySample>& rays, long order_max,
                                    const OracleSettings& settings) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "transport-oracle";
    rep.status = VerifyStatus::numeric_pass;
    for (const RaySample& ray : rays) {
        if (!rep.passed()) break;
        TransportOracle oracle(table.op(), ray.xi, settings);
        std::vector<double> numeric = oracle.u_list(order_max, ray.x);
        for (long nu = 0; nu <= order_max; ++nu) {
            const double closed = table.u_value(ray.x, ray.xi, nu);
            const double rel = std::fabs(numeric[static_cast<size_t>(nu)] - closed) /
                               std::max(1.0, std::fabs(closed));
            ++rep.samples;
            if (nu <= 2) rep.max_residual = std::max(rep.max_residual, rel);
            const double tol = nu <= 2 ? kOracleTolLow : kOracleTolHigh;
            if (rel > tol) {
                std::ostringstream os;
                os << "ray " << point_text(ray.xi) << " -> " << point_text(ray.x)
                   << ", order " << nu << ": oracle "
                   << numeric[static_cast<size_t>(nu)] << " vs closed form " << closed
                   << " (relative deviation " << rel << ")";
                fail_with(rep, os.str());
                break;
            }
        }
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport check_heat_residual(const HadamardTable& table,
                                 const std::vector<HeatSample>& samples, double h,
                                 double tau) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "heat-residual";
    rep.status = VerifyStatus::numeric_pass;
    auto residual = [&](const HeatSample& s, double h_rel, double tau_rel) {
        const double h_abs = h_rel * std::hypot(s.x[0], s.x[1]);
        const double tau_abs = tau_rel * s.t;
        if (s.t <= 2.0 * tau_abs)
            throw InvalidArgumentError("time step too large for the sample time");
        auto kernel = [&](const std::array<double, 2>& y, double t) {
            return table.heat_value(y, s.xi, t);
        };
        const double dt = (-kernel(s.x, s.t + 2 * tau_abs) +
                           8 * kernel(s.x, s.t + tau_abs) -
                           8 * kernel(s.x, s.t - tau_abs) +
                           kernel(s.x, s.t - 2 * tau_abs)) /
                          (12 * tau_abs);
        const double lap = laplacian_fd4(
            [&](const std::array<double, 2>& y) { return kernel(y, s.t); }, s.x, h_abs);
        const double value = kernel(s.x, s.t);
        const double v = table.op().potential_value(s.x[0], s.x[1]);
        return std::make_pair(dt - lap + v * value, value);
    };
    for (size_t idx = 0; idx < samples.size() && rep.passed(); ++idx) {
        const HeatSample& s = samples[idx];
        const auto [fine, value] = residual(s, h, tau);
        const double rel = std::fabs(fine) / std::fabs(value);
        ++rep.samples;
        if (!(rel < kHeatTol)) {
            std::ostringstream os;
            os << "sample " << idx << " at x=" << point_text(s.x)
               << ", xi=" << point_text(s.xi) << ", t=" << s.t
               << ": relative residual " << rel;
            fail_with(rep, os.str());
            break;
        }
        rep.max_residual = std::max(rep.max_residual, rel);
        if (rel > kHeatNoiseFloor) {
            const auto [coarse, coarse_value] = residual(s, 2 * h, 2 * tau);
            (void)coarse_value;
            const double factor = std::fabs(coarse) / std::max(std::fabs(fine), 1e-300);
            if (factor < kRichardsonFactor) {
                std::ostringstream os;
                os << "sample " << idx << " at x=" << point_text(s.x)
                   << ", xi=" << point_text(s.xi) << ", t=" << s.t
                   << ": residual grew only " << factor
                   << "x when both steps were doubled";
                fail_with(rep, os.str());
            }
        }
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

ProbeStatistics ba_eigen_probe(const HadamardTable& table,
                               const std::array<double, 2>& xi,
                               const std::vector<std::array<double, 2>>& sample_xs) {
    ProbeStatistics stats;
    std::vector<double> ratios;
    ratios.reserve(sample_xs.size());
    auto psi = [&](const std::array<double, 2>& y) { return table.ba_value(y, xi); };
    for (const std::array<double, 2>& x : sample_xs) {
        const double value = psi(x);
        const double lap = laplacian_fd4(psi, x, 1e-3 * std::hypot(x[0], x[1]));
        const double v = table.op().potential_value(x[0], x[1]);
        ratios.push_back((-lap + v * value) / value);
    }
    stats.samples = static_cast<long>(ratios.size());
    if (ratios.empty()) return stats;
    double sum = 0.0;
    for (double r : ratios) sum += r;
    stats.mean = sum / static_cast<double>(ratios.size());
    for (double r : ratios)
        stats.spread = std::max(stats.spread, std::fabs(r - stats.mean));
    stats.constant = stats.spread < kProbeSpreadTol * std::max(1.0, std::fabs(stats.mean));
    return stats;
}

VerifyReport check_ba_probe(const HadamardTable& table, const std::array<double, 2>& xi,
                            const std::vector<std::array<double, 2>>& sample_xs) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "ba-probe";
    ProbeStatistics stats = ba_eigen_probe(table, xi, sample_xs);
    rep.samples = stats.samples;
    if (stats.constant) {
        rep.status = VerifyStatus::numeric_pass;
        rep.max_residual = stats.spread / std::max(1.0, std::fabs(stats.mean));
    } else {
        std::ostringstream os;
        os << "eigen-ratio not constant across samples at xi=" << point_text(xi)
           << ": mean " << stats.mean << ", spread " << stats.spread;
        fail_with(rep, os.str());
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

// --- negative controls -------------------------------------------------------

VerifyReport negative_unity(const KData& data) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "negative-unity";
    rep.status = VerifyStatus::exact_pass;
    AngularOperator op(data);
    Scalar factor = Scalar::exact(3, 2).to_mode_of(unit_scalar(data));
    TrigPoly2 diff = unity_difference(op, size_t{0}, factor);
    rep.samples = static_cast<long>(data.size());
    if (!diff.is_zero())
        fail_with(rep, "weight of entry 0 scaled by 3/2: " + poly2_witness(diff));
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport negative_eigen(const KData& data) {
    if (data.size() < 2)
        throw InvalidArgumentError("eigen control needs at least two entries to mix");
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "negative-eigen";
    rep.status = VerifyStatus::exact_pass;
    AngularOperator op(data);
    TrigRational mixed = op.eigenfunction(0) + op.eigenfunction(1);
    const long k = data.k()[1];
    TrigRational diff = op.apply(mixed) - mixed.scaled(integer_scalar(data, k * k));
    rep.samples = 1;
    if (!diff.is_zero())
        fail_with(rep,
                  "entries 0 and 1 mixed: L psi - " + std::to_string(k * k) +
                      " psi has a nonzero numerator with " +
                      std::to_string(diff.num().term_count()) + " terms");
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport negative_darboux(const KData& data, long k_next) {
    Stopwatch sw;
    if (k_next <= data.k_max())
        throw InvalidArgumentError("extension entry must exceed the current top entry");
    VerifyReport rep;
    rep.check_name = "negative-darboux";
    rep.status = VerifyStatus::exact_pass;
    AngularOperator base(data);
    AngularOperator ext(extend_by(data, k_next));
    const long k = data.k()[0];
    const long wrong = k_next * k_next - k * k + 1;
    TrigRational diff = darboux_forward(ext, base.eigenfunction(0)) -
                        ext.eigenfunction(0).scaled(integer_scalar(data, wrong));
    rep.samples = 1;
    if (!diff.is_zero())
        fail_with(rep, "raising factor deliberately off by one: difference numerator has " +
                           std::to_string(diff.num().term_count()) + " terms");
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport negative_cramer(const KData& data) {
    if (data.size() < 2)
        throw InvalidArgumentError("cramer control needs at least two entries");
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "negative-cramer";
    rep.status = VerifyStatus::exact_pass;
    const TrigPoly w_full = full_wronskian(data);
    const size_t last = data.size() - 1;
    const TrigPoly w_last = reduced_wronskian(data, {last});
    TrigPoly w_0 = reduced_wronskian(data, {size_t{0}});
    TrigPoly w_pair = reduced_wronskian(data, {size_t{0}, last});
    TrigRational lhs = TrigRational(w_0, w_last).derivative();
    TrigRational rhs(w_full * w_pair, w_last * w_last);
    TrigRational diff = lhs - rhs.scaled(integer_scalar(data, 2));
    rep.samples = 1;
    if (!diff.is_zero())
        fail_with(rep, "right-hand side doubled: difference numerator has " +
                           std::to_string(diff.num().term_count()) + " terms");
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport negative_transport(const HadamardTable& table) {
    if (table.max_order() < 1)
        throw InvalidArgumentError("transport control needs at least one positive order");
    Scalar two = Scalar::exact(2).to_mode_of(unit_scalar(table.data()));
    VerifyReport rep = check_transport_symbolic(table.perturbed(1, two));
    rep.check_name = "negative-transport";
    return rep;
}

VerifyReport negative_vanishing(const HadamardTable& table) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "negative-vanishing";
    rep.status = VerifyStatus::exact_pass;
    const AngularOperator& op = table.op();
    const KData& d = op.data();
    const long nu = table.max_order() + 1;
    // Rebuild the coefficient sum at the first order past the table, with the
    // top entry's polynomial order bumped by one: the terminating cancellation
    // depends on exact orders, so this must leave a nonzero polynomial.
    const TrigPoly2 z = TrigPoly2::cos_difference(1, d.mode(), d.precision_bits());
    TrigPoly2 acc = TrigPoly2::zero(d.mode(), d.precision_bits());
    for (size_t i = 0; i < d.size(); ++i) {
        const unsigned order =
            static_cast<unsigned>(d.k()[i]) + (i + 1 == d.size() ? 1u : 0u);
        std::vector<mpz_class> der =
            chebyshev_derivative(order, static_cast<unsigned>(nu));
        if (der.empty()) continue;
        acc = acc +
              TrigPoly2::tensor(op.reduced_poly(i), op.reduced_poly(i)).scaled(op.weight(i)) *
                  chebyshev_eval(der, z);
    }
    rep.samples = 1;
    if (!acc.is_zero())
        fail_with(rep, "top polynomial order bumped by one at order " +
                           std::to_string(nu) + ": " + poly2_witness(acc));
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport negative_goursat(const KData& data) {
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "negative-goursat";
    rep.status = VerifyStatus::exact_pass;
    SeparatedContext ctx{AngularOperator(data)};
    SeparatedFunction gen = log_term(ctx);
    RadialTerm bumped = gen.terms.back();
    bumped.r_pow += 1;
    RadialTerm image = ctx.apply_polar_op(bumped);
    rep.samples = 1;
    if (!ctx.is_zero(image.angular)) {
        std::ostringstream os;
        os << "radial power of one generating term raised to " << bumped.r_pow
           << ": polar image numerator " << truncated(image.angular.num.canonical_text());
        fail_with(rep, os.str());
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

VerifyReport negative_series(const HadamardTable& table) {
    if (table.max_order() < 1)
        throw InvalidArgumentError("series control needs at least one positive order");
    Scalar two = Scalar::exact(2).to_mode_of(unit_scalar(table.data()));
    VerifyReport rep = check_series(table.perturbed(1, two));
    rep.check_name = "negative-series";
    return rep;
}

VerifyReport negative_ba_probe(const HadamardTable& table,
                               const std::array<double, 2>& xi,
                               const std::vector<std::array<double, 2>>& sample_xs) {
    if (table.max_order() < 1)
        throw InvalidArgumentError("probe control needs at least one positive order");
    Stopwatch sw;
    VerifyReport rep;
    rep.check_name = "negative-ba-probe";
    // Same ratio probe, but with the per-order weights dropped from the sum:
    // the resulting function is no eigenfunction and the ratio drifts.
    auto bad_psi = [&](const std::array<double, 2>& y) {
        double acc = 0.0;
        for (long nu = 0; nu <= table.max_order(); ++nu)
            acc += table.u_value(y, xi, nu);
        return std::exp(y[0] * xi[0] + y[1] * xi[1]) * acc;
    };
    std::vector<double> ratios;
    for (const std::array<double, 2>& x : sample_xs) {
        const double value = bad_psi(x);
        const double lap = laplacian_fd4(bad_psi, x, 1e-3 * std::hypot(x[0], x[1]));
        const double v = table.op().potential_value(x[0], x[1]);
        ratios.push_back((-lap + v * value) / value);
    }
    rep.samples = static_cast<long>(ratios.size());
    double mean = 0.0;
    for (double r : ratios) mean += r;
    if (!ratios.empty()) mean /= static_cast<double>(ratios.size());
    double spread = 0.0;
    for (double r : ratios) spread = std::max(spread, std::fabs(r - mean));
    if (spread < kProbeSpreadTol * std::max(1.0, std::fabs(mean))) {
        rep.status = VerifyStatus::numeric_pass;
        rep.max_residual = spread / std::max(1.0, std::fabs(mean));
    } else {
        std::ostringstream os;
        os << "per-order weights dropped: ratio mean " << mean << ", spread " << spread;
        fail_with(rep, os.str());
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

// --- suite runner --------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "unity",   "eigen",  "darboux", "cramer", "vanishing", "transport",
        "transport-oracle", "goursat", "series", "heat",      "ba-probe"};
    return names;
}

std::vector<VerifyReport> run_suite(const KData& data, const std::string& suite,
                                    const SuiteOptions& options) {
    const std::vector<std::string>& names = suite_names();
    const bool all = suite == "all";
    if (!all && std::find(names.begin(), names.end(), suite) == names.end())
        throw InvalidArgumentError("unknown verify suite: " + suite);
    auto wanted = [&](const char* name) { return all || suite == name; };

    // Most suites share the coefficient table; build it once, lazily.
    std::optional<HadamardTable> table;
    auto tbl = [&]() -> const HadamardTable& {
        if (!table) table.emplace(data);
        return *table;
    };

    std::vector<VerifyReport> out;
    if (wanted("unity")) out.push_back(check_unity(data));
    if (wanted("eigen")) out.push_back(check_eigen(data));
    if (wanted("darboux")) {
        const long next = options.darboux_next > 0 ? options.darboux_next
                                                   : data.k_max() + 1;
        out.push_back(check_darboux(data, next));
    }
    if (wanted("cramer")) out.push_back(check_cramer(data));
    if (wanted("vanishing")) out.push_back(check_vanishing(tbl()));
    if (wanted("transport")) {
        out.push_back(check_transport_symbolic(tbl()));
        out.push_back(check_transport_rescaled(tbl(), Scalar::exact(1, 2)));
        out.push_back(check_transport_rescaled(tbl(), Scalar::exact(-1, 4)));
    }
    if (wanted("transport-oracle")) {
        const long order = std::min<long>(options.oracle_order, 3);
        out.push_back(check_transport_oracle(
            tbl(), admissible_rays(tbl().op(), options.oracle_rays, options.seed),
            order));
    }
    if (wanted("goursat")) out.push_back(check_goursat(data));
    if (wanted("series")) out.push_back(check_series(tbl()));
    if (wanted("heat"))
        out.push_back(check_heat_residual(
            tbl(), heat_samples(tbl(), options.heat_count, options.seed),
            options.heat_step, options.heat_time_step));
    if (wanted("ba-probe")) {
        const std::array<double, 2> xi =
            admissible_points(tbl().op(), 1, options.seed + 17).front();
        out.push_back(check_ba_probe(
            tbl(), xi, ba_probe_points(tbl(), xi, options.probe_count, options.seed)));
    }
    std::sort(out.begin(), out.end(), [](const VerifyReport& a, const VerifyReport& b) {
        return a.check_name < b.check_name;
    });
    return out;
}

}  // namespace huygens
