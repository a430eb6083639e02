#include "core/wronskian.hpp"

#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/laurent.hpp"

namespace huygens {

namespace {

using Matrix = std::vector<std::vector<TrigPoly>>;

// Recursive expansion by minors along the top row. Exact and simple; used
// for the small determinants where factorial growth is irrelevant.
TrigPoly minor_expansion(const Matrix& m, size_t top, std::vector<size_t>& cols) {
    const size_t n = cols.size();
    if (n == 1) return m[top][cols[0]];
    TrigPoly acc;
    bool first = true;
    for (size_t j = 0; j < n; ++j) {
        const size_t col = cols[j];
        cols.erase(cols.begin() + static_cast<long>(j));
        TrigPoly sub = minor_expansion(m, top + 1, cols);
        cols.insert(cols.begin() + static_cast<long>(j), col);
        TrigPoly contrib = m[top][col] * sub;
        if (j % 2 == 1) contrib = -contrib;
        acc = first ? std::move(contrib) : acc + contrib;
        first = false;
    }
    return acc;
}

// Fraction-free Bareiss elimination in the Laurent model, where exact
// division is available. Row swaps flip the sign.
TrigPoly bareiss_determinant(const Matrix& m) {
    const size_t n = m.size();
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = LaurentPoly::from_trig(m[i][j]);

    int sign = 1;
    LaurentPoly prev_pivot = LaurentPoly::from_trig(TrigPoly::constant(Scalar::exact(1)));
    for (size_t step = 0; step + 1 < n; ++step) {
        if (a[step][step].is_zero()) {
            size_t swap_row = step + 1;
            while (swap_row < n && a[swap_row][step].is_zero()) ++swap_row;
            if (swap_row == n) return TrigPoly::zero(Mode::exact);  // zero column
            std::swap(a[step], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = step + 1; i < n; ++i) {
            for (size_t j = step + 1; j < n; ++j) {
                LaurentPoly t = a[step][step] * a[i][j] - a[i][step] * a[step][j];
                a[i][j] = t.divide_exact(prev_pivot);
            }
            a[i][step] = LaurentPoly();
        }
        prev_pivot = a[step][step];
    }
    TrigPoly det = a[n - 1][n - 1].to_trig();
    return sign < 0 ? -det : det;
}

// Division-free minor expansion with memoization over column subsets,
// bottom-up by subset size: the float-mode fallback for larger matrices
// (Bareiss needs exact division). Cost 2^n subsets instead of n! paths.
TrigPoly subset_expansion(const Matrix& m) {
    const size_t n = m.size();
    // dp maps a column bitmask to the determinant of the lower-right block
    // formed by rows n-|mask|..n-1 and the mask's columns.
    std::vector<TrigPoly> dp(size_t(1) << n);
    dp[0] = TrigPoly::constant(m[0][0].mode() == Mode::exact
                                   ? Scalar::exact(1)
                                   : Scalar::floating(1.0, m[0][0].precision_bits()));

    for (size_t mask = 1; mask < dp.size(); ++mask) {
        const size_t size = static_cast<size_t>(__builtin_popcountll(mask));
        const size_t row = n - size;
        TrigPoly acc;
        bool first = true;
        size_t parity = 0;
        for (size_t col = 0; col < n; ++col) {
            if (!(mask & (size_t(1) << col))) continue;
            const size_t rest = mask & ~(size_t(1) << col);
            TrigPoly contrib = m[row][col] * dp[rest];
            if (parity % 2 == 1) contrib = -contrib;
            acc = first ? std::move(contrib) : acc + contrib;
            first = false;
            ++parity;
        }
        dp[mask] = std::move(acc);
    }
    return dp[dp.size() - 1];
}

}  // namespace

TrigPoly basis_function(const KData& data, size_t i) {
    if (i >= data.size())
        throw InvalidArgumentError("basis function index " + std::to_string(i) +
                                   " out of range");
    return TrigPoly::shifted_cosine(data.k()[i], data.phases()[i]);
}

TrigPoly wronskian(const std::vector<TrigPoly>& funcs, Mode empty_mode,
                   unsigned empty_bits) {
    if (funcs.empty()) {
        Scalar one = empty_mode == Mode::exact ? Scalar::exact(1)
                                               : Scalar::floating(1.0, empty_bits);
        return TrigPoly::constant(one);
    }
    const size_t n = funcs.size();
    if (n == 1) return funcs[0];

    Matrix m(n, std::vector<TrigPoly>(n));
    for (size_t c = 0; c < n; ++c) {
        m[0][c] = funcs[c];
        for (size_t r = 1; r < n; ++r) m[r][c] = m[r - 1][c].derivative();
    }

    if (n <= 4) {
        std::vector<size_t> cols(n);
        for (size_t j = 0; j < n; ++j) cols[j] = j;
        return minor_expansion(m, 0, cols);
    }
    if (funcs[0].mode() == Mode::exact) return bareiss_determinant(m);
    return subset_expansion(m);
}

TrigPoly reduced_wronskian(const KData& data, const std::set<size_t>& omit) {
    for (size_t i : omit)
        if (i >= data.size())
            throw InvalidArgumentError("omitted index " + std::to_string(i) +
                                       " out of range");
    std::vector<TrigPoly> funcs;
    funcs.reserve(data.size() - omit.size());
    for (size_t i = 0; i < data.size(); ++i)
        if (!omit.count(i)) funcs.push_back(basis_function(data, i));
    return wronskian(funcs, data.mode(), data.precision_bits());
}

TrigPoly full_wronskian(const KData& data) { return reduced_wronskian(data, {}); }

}  // namespace huygens
