#include "core/chebyshev.hpp"

namespace huygens {

namespace {

// T_{n+1} = 2z T_n - T_{n-1} on coefficient lists.
std::vector<mpz_class> recurrence_step(const std::vector<mpz_class>& tn,
                                       const std::vector<mpz_class>& tnm1) {
    std::vector<mpz_class> next(tn.size() + 1, mpz_class(0));
    for (size_t i = 0; i < tn.size(); ++i) next[i + 1] = 2 * tn[i];
    for (size_t i = 0; i < tnm1.size(); ++i) next[i] -= tnm1[i];
    return next;
}

}  // namespace

std::vector<mpz_class> chebyshev_coeffs(unsigned N) {
    std::vector<mpz_class> prev = {mpz_class(1)};  // T_0
    if (N == 0) return prev;
    std::vector<mpz_class> cur = {mpz_class(0), mpz_class(1)};  // T_1
    for (unsigned n = 1; n < N; ++n) {
        std::vector<mpz_class> next = recurrence_step(cur, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<mpz_class> chebyshev_derivative(unsigned N, unsigned nu) {
    std::vector<mpz_class> c = chebyshev_coeffs(N);
    for (unsigned round = 0; round < nu; ++round) {
        if (c.size() <= 1) return {};
        std::vector<mpz_class> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = mpz_class(i) * c[i];
        c = std::move(d);
    }
    return c;
}

double chebyshev_eval(const std::vector<mpz_class>& coeffs, double z) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + it->get_d();
    return acc;
}

double chebyshev_value(unsigned N, double z) {
    if (N == 0) return 1.0;
    double prev = 1.0, cur = z;
    for (unsigned n = 1; n < N; ++n) {
        const double next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Scalar chebyshev_eval(const std::vector<mpz_class>& coeffs, const Scalar& z) {
    Scalar acc = z.zero_like();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + Scalar::exact(*it).to_mode_of(z);
    return acc;
}

TrigPoly2 chebyshev_eval(const std::vector<mpz_class>& coeffs, const TrigPoly2& z) {
    TrigPoly2 acc = TrigPoly2::zero(z.mode(), z.precision_bits());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        Scalar c = Scalar::exact(*it);
        if (z.mode() == Mode::floating) c = c.to_floating(z.precision_bits());
        acc = acc * z + TrigPoly2::constant(c);
    }
    return acc;
}

}  // namespace huygens
